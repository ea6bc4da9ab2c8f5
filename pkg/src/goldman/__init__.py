"""Exact arithmetic for the homological Goldman Lie algebra QH of a genus-g
surface, bracket-word certificates over small generating sets, and a
checker for necessary conditions on generating subsets of H."""

from .algebra import (Element, ad_chain_apply, basis_element, bracket, linear_combine,
                      parse_element, project_away_zero)
from .checker import Reason, SetReport, check_necessary, oracle_reachable
from .lattice import (GenusConfig, intersection, is_primitive, is_z_basis, monoid_member,
                      z_spans)
from .synthesis import (lemma1_extend, lemma2_certificate, proposition_table_certificates,
                        substitute, synthesize_from_proposition, synthesize_from_upper,
                        upper_table_certificates)
from .words import (Br, Certificate, Gen, GeneratorTable, evaluate, nested_coefficient,
                    verify)

__version__ = "0.1.0"

__all__ = [
    "Element", "ad_chain_apply", "basis_element", "bracket", "linear_combine", "parse_element",
    "project_away_zero", "Reason", "SetReport", "check_necessary", "oracle_reachable",
    "GenusConfig", "intersection", "is_primitive", "is_z_basis", "monoid_member", "z_spans",
    "lemma1_extend", "lemma2_certificate", "proposition_table_certificates", "substitute",
    "synthesize_from_proposition", "synthesize_from_upper", "upper_table_certificates",
    "Br", "Certificate", "Gen", "GeneratorTable", "evaluate", "nested_coefficient", "verify",
]
