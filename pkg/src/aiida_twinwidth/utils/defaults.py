# -*- coding: utf-8 -*-
"""Default limits and options shared by the library, the work chain and the command line."""

#: Largest union closure enumerated when computing the boolean-width of a cut.
UNION_CLOSURE_CAP = 2**20

#: Number of search nodes the exact width search may expand before giving up.
EXACT_NODE_BUDGET = 2_000_000

#: Number of search nodes the exact matrix twin-width search may expand before giving up.
MATRIX_NODE_BUDGET = 500_000

#: Largest `rows + columns` accepted by the exact matrix twin-width search.
MATRIX_EXACT_MAX_DIMENSION = 10

#: Largest number of rows or columns accepted by the mixed-minor enumeration.
MIXED_MINOR_MAX_DIMENSION = 12

#: Largest graph accepted by the brute-force mixed value.
MIXED_VALUE_MAX_VERTICES = 6

#: Caps of the brute-force chromatic oracle.
ORACLE_MAX_VERTICES = 12
ORACLE_MAX_COLORS = 4


def get_default_build_options(
    exact_max_vertices: int = 8,
    node_budget: int = EXACT_NODE_BUDGET,
    with_decomposition: bool = False,
) -> dict:
    """Return the default options of the `TwinWidthWorkChain` sequence builders.

    :param exact_max_vertices: the exact search only runs on graphs up to this number of vertices
    :param node_budget: number of search nodes the exact search may expand
    :param with_decomposition: whether to attach a branch decomposition derived from the best sequence
    """
    return {
        'exact_max_vertices': int(exact_max_vertices),
        'node_budget': int(node_budget),
        'with_decomposition': with_decomposition,
    }
