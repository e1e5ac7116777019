"""Global constants for the verification engine.

Suite names, realization tags and the default test-space depths live here so
that the runner, the CLI and the settings agree on them.
"""

# Suite names (pipeline stage names)
SUITE_OSP = "osp"
SUITE_BI_RELATIONS = "bi-relations"
SUITE_CASIMIRS = "casimirs"
SUITE_MONOGENICS = "monogenics"
SUITE_LADDER = "ladder"
SUITE_SCALAR = "scalar"

ALL_SUITES = (SUITE_OSP, SUITE_BI_RELATIONS, SUITE_CASIMIRS, SUITE_MONOGENICS, SUITE_LADDER, SUITE_SCALAR)

SUITE_DESCRIPTIONS = {
    SUITE_OSP: "osp(1|2) relations, Dunkl commutativity and sCasimir anticommutation",
    SUITE_BI_RELATIONS: "Bannai-Ito anticommutation relations and generating-set recursion",
    SUITE_CASIMIRS: "Quadratic and cubic Casimirs, rank-one structure constants",
    SUITE_MONOGENICS: "Dunkl monogenic basis, eigenvalues, Fischer decomposition, orthogonality",
    SUITE_LADDER: "Ladder operators, spectral values and irreducibility",
    SUITE_SCALAR: "Clifford-free realization of the same relations",
}

# Realization tags
REALIZATION_CLIFFORD = "clifford"
REALIZATION_SCALAR = "scalar"
REALIZATION_BOTH = "both"

# Default maximal test degree per dimension
CLIFFORD_DEPTHS = {3: 4, 4: 3, 5: 2}
SCALAR_DEPTHS = {3: 5, 4: 4, 5: 3}
FALLBACK_DEPTH = 1

# Monogenic constructions are heavier than operator identities
MONOGENIC_DEPTHS = {3: 3, 4: 2, 5: 1}

# Parameter sampling: numerators and denominators drawn from [1, SAMPLE_BOUND]
SAMPLE_BOUND = 20
DEFAULT_SEED = 20240
DEFAULT_PARAMETER_SETS = 3

# Relative tolerance of the floating-point quadrature oracle
QUADRATURE_TOLERANCE = 1e-8

# Output files
REPORT_FILE = "report.json"
TIMINGS_FILE = "timings.json"
LADDER_FILE = "ladder_actions.csv"
BASIS_DIR = "basis"
CONNECTION_DIR = "connection"
