# Global Constants

class VerdictKinds:
    PROVEN = "proven"
    REFUTED = "refuted"
    EVIDENCE = "evidence"
    INCONCLUSIVE = "inconclusive"


class Properties:
    REDUCED = "reduced"
    F_PURE = "f_pure"
    COHEN_MACAULAY = "cohen_macaulay"
    FLC = "flc"
    BUCHSBAUM = "buchsbaum"
    BUCHSBAUM_COLON = "buchsbaum_colon"
    D_SEQUENCE = "d_sequence"
    DELTA_CONSTANCY = "delta_constancy"
    BUCHSBAUM_CONSTANT = "buchsbaum_constant"
    F_INJECTIVE_MATRIX = "f_injective_matrix"
    SOP_CLOSURE = "sop_closure"
    CM_F_INJECTIVE = "cm_f_injective"
    TOP_COHOMOLOGY = "top_cohomology"
    PARTIAL_SOP_CLOSURE = "partial_sop_closure"
    UNMIXED_DENOMINATOR = "unmixed_denominator"
    C_CONSISTENCY = "c_consistency"
    GRADED_WINDOW = "graded_window"
    FROBENIUS_CLOSED = "frobenius_closed"
    COLON_STABILIZATION = "colon_stabilization"
    F_INJECTIVE = "f_injective"
    MULTIPLICITY = "multiplicity"
    CLOSURE_MEMBERSHIP = "closure_membership"


class OrderKinds:
    WGREVLEX = "wgrevlex"
    LEX = "lex"
    ELIMINATION = "elimination"


class Families:
    SQUAREFREE_MONOMIAL = "squarefree-monomial"
    BINOMIAL = "binomial"
    HYPERSURFACE = "hypersurface"

    ALL = (SQUAREFREE_MONOMIAL, BINOMIAL, HYPERSURFACE)


class ExitCodes:
    OK = 0
    USAGE = 1
    REFUTED = 2
    CONTRADICTION = 3


class ContradictionRules:
    FEDDER_CLOSURE = "f_pure_vs_closure"
    FEDDER_MATRIX = "f_pure_vs_matrix"
    MATRIX_CLOSURE = "matrix_vs_sop_closure"
    FLC_CLOSED_BUCHSBAUM = "flc_closed_implies_buchsbaum"
    PARTIAL_CLOSURE = "partial_sop_inheritance"
    C_CONSISTENCY = "c_consistency"
    DELTA_BOUND = "delta_bounded_by_c"
    GRADED_WINDOW = "f_injective_degree_zero"
    CM_COHOMOLOGY = "cm_vanishing"
    UNMIXED = "unmixed_identity"
