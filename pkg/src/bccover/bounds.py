"""Lower and upper bounds on the biclique cover number, with provenance.

The flagship lower bound is ceil(log2(mc(complement))): the number of maximal
cliques of the complement (equivalently, maximal independent sets of the
graph) forces that many cover members apart.  It always dominates the
chromatic log bound, and on many graphs beats the conflict-graph and matching
bounds too.  :func:`full_report` assembles every applicable bound for one
graph and cross-checks the certified ones against each other and against the
oracle when it is in reach.

Each reported bound carries a provenance tag: "exact" (proven for this graph),
"heuristic" (from an approximation, not certified), or "conditional" (follows
a published recipe whose edge cases keep it out of certified comparisons; the
conflict-graph bound lives here, since its 4-cycle exclusion rule can
overshoot on dense graphs).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chordal import clique_tree
from .cover import CoverMetadata, cover_cochordal
from .errors import BudgetExceededError, NotChordalError
from .graph import Graph
from .oracle import (
    DEFAULT_SEARCH_BUDGET,
    DEFAULT_VALUE_BUDGET,
    OracleBudget,
    OracleResult,
    _check_caps,
    enumerate_maximal_cliques,
    exact_bc,
    exact_bp,
    exact_chromatic,
    exact_clique_number,
    exact_max_matching,
)
from .ranking import ceil_log2


def maximal_clique_count_complement(g, budget=None):
    """mc of the complement: via its clique tree when chordal, else by
    enumeration within the budget."""
    gc = g.complement()
    try:
        return clique_tree(gc).node_count
    except NotChordalError:
        return len(enumerate_maximal_cliques(gc, budget or DEFAULT_VALUE_BUDGET))


def lb_log_mc(g, budget=None):
    """ceil(log2(mc(complement))); 0 when the complement has one clique."""
    if g.n == 0:
        return 0
    return ceil_log2(maximal_clique_count_complement(g, budget))


def greedy_coloring_bound(g):
    """Largest-first greedy coloring; an upper bound on the chromatic number."""
    if g.n == 0:
        return 0
    colors = [0] * g.n
    for v in sorted(range(g.n), key=lambda v: -g.degree(v)):
        taken = {colors[u] for u in g.neighborhood(v) if colors[u]}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return max(colors)


def lb_log_chi(g, budget=None):
    """ceil(log2(chromatic number)) and whether it is certified.

    Falls back to a greedy coloring when the exact search is out of budget;
    the fallback value is reported uncertified since greedy only upper-bounds
    the chromatic number.
    """
    if g.n == 0:
        return 0, True
    try:
        result = exact_chromatic(g, budget)
        if result.exact:
            return ceil_log2(result.value), True
        return ceil_log2(result.upper), False
    except BudgetExceededError:
        return ceil_log2(greedy_coloring_bound(g)), False


def conflict_graph(g, induced_c4_only=True):
    """Graph on the edges of ``g``: vertex i is the i-th edge (lexicographic),
    and two vertices are adjacent when the edges share no endpoint and do not
    sit together in a 4-cycle.

    With ``induced_c4_only`` (the default) only a chordless 4-cycle counts as
    an exclusion, which reproduces the published example values; the stricter
    variant (any 4-cycle through both edges) never overshoots the cover
    number and is the one safe to use for pruning.
    """
    edges = g.edges()
    adjacency = []
    for i in range(len(edges)):
        a, b = edges[i]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if len({a, b, c, d}) != 4:
                continue
            straight = g.has_edge(a, c) and g.has_edge(b, d)
            crossed = g.has_edge(a, d) and g.has_edge(b, c)
            if induced_c4_only:
                in_c4 = (straight and not g.has_edge(a, d) and not g.has_edge(b, c)) or (
                    crossed and not g.has_edge(a, c) and not g.has_edge(b, d)
                )
            else:
                in_c4 = straight or crossed
            if not in_c4:
                adjacency.append((i, j))
    return Graph(len(edges), adjacency)


def lb_omega_conflict(g, budget=None):
    """Clique number of the conflict graph.

    The budget caps apply to the input graph; the clique search on the
    derived conflict graph (one vertex per input edge) keeps only the time
    cap.
    """
    budget = budget or DEFAULT_VALUE_BUDGET
    _check_caps(g, budget)
    conflict = conflict_graph(g)
    if conflict.n == 0:
        return 0
    inner = OracleBudget(
        vertex_cap=max(budget.vertex_cap, conflict.n),
        edge_cap=max(budget.edge_cap, conflict.m, 1),
        time_cap=budget.time_cap,
    )
    return exact_clique_number(conflict, inner).value


def lb_matching(g, budget=None):
    """|maximum matching|^2 / |E| as an exact fraction (0 for no edges)."""
    if g.m == 0:
        return Fraction(0)
    matching = exact_max_matching(g, budget).value
    return Fraction(matching * matching, g.m)


def first_clique_coloring(g, budget=None):
    """Color every vertex by the index of the first maximal clique of the
    complement containing it (1-based).

    Always a proper coloring of ``g``, which is why mc(complement) bounds the
    chromatic number from above.
    """
    cliques = enumerate_maximal_cliques(g.complement(), budget or DEFAULT_VALUE_BUDGET)
    colors = [0] * g.n
    for v in range(g.n):
        for i, k in enumerate(cliques, start=1):
            if v in k:
                colors[v] = i
                break
    return tuple(colors)


@dataclass(frozen=True)
class BpBcWindow:
    """What is known about the partition number of a co-chordal graph.

    ``bp_upper_context`` is the older (3**bc - 1)/2 bound, carried for
    comparison only; it is weaker than 2**bc - 1 whenever bc > 1 and is
    never used in any certified check.
    """

    bp_upper: int
    bc_lower_from_bp: int | None = None
    bp_upper_context: int | None = None


def bp_bc_window(g, bc_value=None, bp_value=None):
    """Partition/cover window for a co-chordal graph.

    ``bp_upper`` is mc(complement) - 1, sharpened to 2**bc - 1 when the exact
    cover number is supplied.  With a known partition number the implied
    cover lower bound ceil(log2(bp + 1)) is returned and checked against
    ``bc_value`` when both are present.
    """
    gc = g.complement()
    mc = clique_tree(gc).node_count  # raises NotChordalError otherwise
    bp_upper = max(0, mc - 1)
    context = None
    if bc_value is not None:
        bp_upper = min(bp_upper, 2 ** bc_value - 1)
        context = (3 ** bc_value - 1) // 2
    bc_lower = None
    if bp_value is not None:
        bc_lower = ceil_log2(bp_value + 1)
        if bc_value is not None:
            assert bc_value >= bc_lower
    return BpBcWindow(bp_upper, bc_lower, context)


# -- aggregated report --------------------------------------------------------


@dataclass(frozen=True)
class BoundEntry:
    value: object
    tag: str  # "exact" | "heuristic" | "conditional"


@dataclass
class BoundReport:
    n: int
    m: int
    lb_log_mc: BoundEntry | None = None
    lb_log_chi: BoundEntry | None = None
    lb_omega_conflict: BoundEntry | None = None
    lb_matching: BoundEntry | None = None
    ub_mc_minus_one: BoundEntry | None = None
    ub_edge_ranking: BoundEntry | None = None
    cover_size: int | None = None
    cover: list | None = None
    cover_meta: CoverMetadata | None = field(default=None, repr=False)
    oracle_bc: OracleResult | None = None
    oracle_bp: OracleResult | None = None
    bp_window: BpBcWindow | None = None
    inconsistent: bool = False

    def certified_lower_bounds(self):
        out = []
        for entry in (self.lb_log_mc, self.lb_log_chi):
            if entry is not None and entry.tag == "exact":
                out.append(entry.value)
        if self.lb_matching is not None and self.lb_matching.tag == "exact":
            q = self.lb_matching.value
            out.append(-(-q.numerator // q.denominator))
        return out

    def certified_upper_bounds(self):
        out = []
        for entry in (self.ub_mc_minus_one, self.ub_edge_ranking):
            if entry is not None and entry.tag == "exact":
                out.append(entry.value)
        if self.cover_size is not None:
            out.append(self.cover_size)
        return out


def full_report(g, value_budget=None, search_budget=None, run_oracle=True,
                ranking_mode="auto"):
    """Compute every applicable bound for ``g``; failures of individual
    members leave their fields unset instead of aborting the report."""
    value_budget = value_budget or DEFAULT_VALUE_BUDGET
    search_budget = search_budget or DEFAULT_SEARCH_BUDGET
    report = BoundReport(n=g.n, m=g.m)

    mc = None
    try:
        mc = maximal_clique_count_complement(g, value_budget)
        report.lb_log_mc = BoundEntry(ceil_log2(mc) if g.n else 0, "exact")
    except BudgetExceededError:
        pass

    try:
        value, certified = lb_log_chi(g, value_budget)
        report.lb_log_chi = BoundEntry(value, "exact" if certified else "heuristic")
    except BudgetExceededError:
        pass

    try:
        # published recipe; kept out of certified comparisons (see module doc)
        report.lb_omega_conflict = BoundEntry(
            lb_omega_conflict(g, value_budget), "conditional"
        )
    except BudgetExceededError:
        pass

    try:
        report.lb_matching = BoundEntry(lb_matching(g, value_budget), "exact")
    except BudgetExceededError:
        pass

    cochordal = False
    try:
        cover, meta = cover_cochordal(g, ranking_mode=ranking_mode)
        cochordal = True
        report.cover = cover
        report.cover_meta = meta
        report.cover_size = len(cover)
        report.ub_mc_minus_one = BoundEntry(max(0, meta.mc_complement - 1), "exact")
        if len(cover) <= meta.ranking_r or meta.ranking_r == 0:
            tag = "exact"
        else:
            tag = "conditional"  # ranking did not bound this instance
        if meta.ranking_r or not g.m:
            report.ub_edge_ranking = BoundEntry(meta.ranking_r, tag)
    except NotChordalError:
        pass

    if run_oracle:
        try:
            report.oracle_bc = exact_bc(g, search_budget)
            report.oracle_bp = exact_bp(g, search_budget)
        except BudgetExceededError:
            pass

    if cochordal:
        bc_value = None
        if report.oracle_bc is not None and report.oracle_bc.exact:
            bc_value = report.oracle_bc.value
        bp_value = None
        if report.oracle_bp is not None and report.oracle_bp.exact:
            bp_value = report.oracle_bp.value
        report.bp_window = bp_bc_window(g, bc_value=bc_value, bp_value=bp_value)

    lowers = report.certified_lower_bounds()
    uppers = report.certified_upper_bounds()
    if lowers and uppers and max(lowers) > min(uppers):
        report.inconsistent = True
    if report.oracle_bc is not None and report.oracle_bc.exact:
        bc = report.oracle_bc.value
        if (lowers and max(lowers) > bc) or (uppers and min(uppers) < bc):
            report.inconsistent = True
    return report


def report_to_json_dict(report):
    """Fixed-schema JSON form of a report."""
    matching = report.lb_matching.value if report.lb_matching else None
    bounds = {
        "log_mc": report.lb_log_mc.value if report.lb_log_mc else None,
        "log_chi": report.lb_log_chi.value if report.lb_log_chi else None,
        "omega_conflict": (
            report.lb_omega_conflict.value if report.lb_omega_conflict else None
        ),
        "matching_num": matching.numerator if matching is not None else None,
        "matching_den": matching.denominator if matching is not None else None,
    }
    cover = None
    if report.cover is not None:
        meta = report.cover_meta
        cover = {
            "size": report.cover_size,
            "bicliques": [
                [sorted(b.canonical().left), sorted(b.canonical().right)]
                for b in report.cover
            ],
            "ranking_r": meta.ranking_r,
            "ranking_optimal": meta.ranking_optimal,
            "all_leq2_flag": meta.all_le_two,
        }
    oracle = None
    if report.oracle_bc is not None or report.oracle_bp is not None:
        bc = report.oracle_bc
        bp = report.oracle_bp
        oracle = {
            "bc": bc.value if bc is not None and bc.exact else None,
            "bp": bp.value if bp is not None and bp.exact else None,
            "exact": bool(
                bc is not None and bc.exact and bp is not None and bp.exact
            ),
        }
    return {"n": report.n, "m": report.m, "bounds": bounds, "cover": cover,
            "oracle": oracle}
