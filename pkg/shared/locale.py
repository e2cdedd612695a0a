# CLI
# meta
APP_HELP = "Existence of semistable parabolic systems of Hodge bundles on the projective line, with quantum Schubert calculus."
CMD_QPROD = "Quantum product of two Schubert classes in Gr(r,n)."
CMD_GW = "Gromov-Witten number <s_1,...,s_k>_d in Gr(r,n)."
CMD_GGW = "Generalized Gromov-Witten number <s_I1,...,s_Ik>_{d,D} from index sets."
CMD_CHECK_1N = "Type (1,n): enumerate and test every semistability inequality."
CMD_CHECK_12 = "Type (1,2) through shifted splitting types."
CMD_CHECK_11 = "Type (1,1): feasible degree splits."
CMD_CHECK_111 = "Type (1,1,1) chain conditions."
CMD_CHECK_CHAIN = "Type (1,...,1) chain conditions."
CMD_CHECK_UNITARY = "Parabolic bundles of degree 0 (no Higgs field)."
CMD_BISWAS = "Rank-2 odd-subset criterion (unitary schema, n=2)."

# flags
OPT_STRICT = "Use < (stable) instead of <= (semistable)."
OPT_JSON = "Emit the machine-readable report."
OPT_D = "Curve degree d."
OPT_BIG_D = "Negated degree D of the ambient generic bundle."
OPT_SEARCH = "Scan every admissible degree triple instead of reading the file's degrees."

# report
VERDICT_EXISTS = "exists"
VERDICT_NOT_EXISTS = "not-exists"
SOLUTION = "k={k}; degrees ({degrees})"
SOLUTION_NO_K = "degrees ({degrees})"
MODE = "mode: {mode} ({relation})"
SUMMARY = "records: {total}, violated: {violated}"
DEGREES = "degrees: {degrees}"
SHIFT = "shift {point}: {component} weight {before} -> {after}"
RECORD = "{status} {kind} r={r}{delta}{gw}{subsets}: {expression} {relation} {rhs}  [lhs {lhs}, gap {gap}]"
STATUS_BAD = "VIOLATED"
STATUS_OK = "ok      "

# diagnostics
ERR_INPUT = "error [{code}] at {location}: {message}"
ERR_RUN = "error: {message}"
ERR_SCHEMA_MISMATCH = "command {command} expects schema {expected}, file has {actual}"
