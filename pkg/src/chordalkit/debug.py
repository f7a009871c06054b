"""Runtime invariant hooks, switched by the CHORDALKIT_DEBUG environment variable.

When enabled, the search drivers and tree builders assert their internal
invariants on the fly (label order versus processed neighborhoods, partial
clique trees checked against the brute-force oracle). The checks are
exhaustive, so they are size-gated and meant for small inputs only.
"""

import os

# oracle-backed mid-run checks are exponential; keep them to toy sizes
ORACLE_CHECK_MAX_N = 8
LABEL_CHECK_MAX_N = 64


def enabled() -> bool:
    return os.environ.get("CHORDALKIT_DEBUG", "") == "1"
