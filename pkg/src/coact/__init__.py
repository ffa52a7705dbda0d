"""Monoids, right acts and right congruences over finite and computable monoids."""
from .acts import (ActError, FiniteRightAct, FreeAct, free_act, ideal_quotient,
                   minimal_generating_set, regular_act, rho_closure, subact_generated,
                   subact_intersection)
from .bounded import BoundError, bounded_relation, saturated_class
from .computable import (BicyclicMonoid, BruckReilly, ComputableMonoid, ExtendedBruckReilly,
                         FreeMonoid, ProductMonoid)
from .congruence import (ActCongruence, HSequenceWitness, ann_of_class, annihilator,
                         congruence_closure, extend_congruence, h_sequence_witness,
                         quotient_act, restrict_congruence, right_congruence, srcep_check)
from .constructions import (BREndo, adjoin_identity, adjoin_zero, bicyclic, brandt,
                            bruck_reilly, cyclic_group, direct_product, extended_bruck_reilly,
                            free_monoid, rees_matrix, u2)
from .formats import SpecError, emit_congruence, emit_table, parse_monoid_spec, parse_table
from .monoid import (FiniteMonoid, MonoidError, Verdict, green, idempotents, is_inverse,
                     is_regular, natural_order, tilde_relations, unitary_status, validate)

__version__ = "0.1.0"
