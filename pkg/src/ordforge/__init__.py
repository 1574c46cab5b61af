"""Goodstein dilators, Ackermann normal forms and Veblen notations."""
from .ackermann import (AckermannDilator, EvalBudget, ack_apply, ack_eval, ack_nf,
                        ack_supp, fgh_eval)
from .ahat import ONE, ZERO, Comp, Zero, ahat_apply, ahat_compare, ahat_gen, ahat_supp, ahat_valid, mu_inv, mu_iso
from .binary import BinaryDilator, bin_apply, bin_digits, bin_supp, classic_step, her_rep, her_value
from .dilators import (BarElement, Dilator, bar_apply, bar_compare, bar_member,
                       brute_min_support, check_support_criterion, eta, mu)
from .embeddings import o_down, o_up, star_data, subterm_data
from .errors import *  # noqa: F401,F403
from .goodstein import (AffineBase, ConstantBase, FromOrderCoeff, GoodsteinSystem, IdentityCoeff,
                        ShiftCoeff, TableBase, TableCoeff, classic_run, descend_search,
                        direct_limit, run, step, system_from_order, validate_system, witness_map)
from .orders import (DescSeq, DirectLimit, FiniteSegment, FinMap, Naturals, OnePlus, Ordering,
                     Product, TwoPlus, compare, enum_embedding, induced_morphism, parse_order)
from .veblen import VZERO, Phi, Sum, VZero, veb_add, veb_compare, veb_gen, veb_h, veb_valid

__version__ = "0.1.0"
