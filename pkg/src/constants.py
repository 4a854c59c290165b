VERTEX_PREFIX = "v"
EDGE_SEPARATOR = "-"
INVERSE_SUFFIX = "^-1"
VERTICES_HEADER = "vertices:"

MAX_CLIQUE_SIZE = 4
RAAG_TOP_DEGREE = 3
BB_TOP_DEGREE = 2

TIETZE_BUDGET = 1000
MAX_RESONANCE_VERTICES = 16

JSON_INDENT = 2

# Oracle sampling ranges for randomized checks
SAMPLE_NUMERATOR_BOUND = 7
SAMPLE_DENOMINATOR_BOUND = 5

CONSTRUCTOR_ARITY = {
    "K": 1,
    "Kbar": 1,
    "path": 1,
    "cycle": 1,
    "join": 2,
}

MIN_CONSTRUCTOR_SIZE = {
    "K": 1,
    "Kbar": 1,
    "Km": 1,
    "path": 1,
    "cycle": 3,
}

COMMENT_PREFIX = "#"

FP_INFINITY_NOTE = (
    "Class B4 groups are not of type FP_infinity. That property survives passage to "
    "finite-index subgroups and extensions by finite groups, so no group commensurable up to "
    "finite kernels to N admits a finite-type K(pi,1)."
)

ASPHERICAL_NOTE = (
    "Classes B1-B3 are fundamental groups of products of punctured lines, which are "
    "aspherical smooth quasi-projective varieties."
)

TOP_HOMOLOGY_NOTE = (
    "The flag complex is a wedge of {spheres}-spheres, so N is of type FP_{spheres} but not "
    "FP_{degree}: H_{degree}(N) is not finitely generated (reported fact, not computed)."
)

DISCONNECTED_NOTE = (
    "Gamma is disconnected, so N_Gamma is not finitely generated; "
    "reported fact, not computed."
)
