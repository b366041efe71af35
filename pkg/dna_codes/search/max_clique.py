"""Exact maximum clique by branch and bound over bitset adjacency.

Candidate sets are Python integers used as bitsets. Each search node
colours its candidates greedily; a colour class is an independent set,
so the number of colours bounds the clique that can still be added.
"""
import time
import logging

import networkx as nx

logger = logging.getLogger(__name__)


class _BudgetExhausted(Exception):
    pass


def _lowest_bit(mask):
    return (mask & -mask).bit_length() - 1


class MaxCliqueSolver(object):
    """Branch-and-bound maximum clique solver.

    Vertices are ordered by decreasing core number, then decreasing
    degree, then label, so search results are reproducible.
    """
    def __init__(self, graph, budget=None, check_interval=1024):
        """Constructor.

        Args:
            graph: networkx.Graph with sortable node labels.
            budget: Wall-clock limit in seconds, None for no limit.
            check_interval: Search nodes between clock checks.
        """
        self._graph = graph
        self._budget = budget
        self._check_interval = check_interval
        core = nx.core_number(graph) if graph.number_of_nodes() else {}
        self._order = sorted(
            graph.nodes, key=lambda v: (-core[v], -graph.degree(v), v))
        position = {v: i for i, v in enumerate(self._order)}
        self._adjacency = [0] * len(self._order)
        for u, v in graph.edges:
            if u == v:
                continue
            self._adjacency[position[u]] |= 1 << position[v]
            self._adjacency[position[v]] |= 1 << position[u]
        self._best = []
        self._nodes = 0
        self._deadline = None

    @property
    def nodes(self):
        """Search nodes explored by the last solve()."""
        return self._nodes

    def _greedy_clique(self):
        best = []
        for start in range(len(self._order)):
            clique = [start]
            candidates = self._adjacency[start]
            while candidates:
                v = _lowest_bit(candidates)
                clique.append(v)
                candidates &= self._adjacency[v]
            if len(clique) > len(best):
                best = clique
        return best

    def _colour_sort(self, candidates):
        order = []
        bounds = []
        colour = 0
        uncoloured = candidates
        while uncoloured:
            colour += 1
            available = uncoloured
            while available:
                v = _lowest_bit(available)
                available &= ~self._adjacency[v] & ~(1 << v)
                uncoloured &= ~(1 << v)
                order.append(v)
                bounds.append(colour)
        return order, bounds

    def _tick(self):
        self._nodes += 1
        if (self._deadline is not None
                and self._nodes % self._check_interval == 0
                and time.monotonic() > self._deadline):
            raise _BudgetExhausted()

    def _expand(self, clique, candidates):
        self._tick()
        order, bounds = self._colour_sort(candidates)
        for index in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[index] <= len(self._best):
                return
            v = order[index]
            clique.append(v)
            remaining = candidates & self._adjacency[v]
            if remaining:
                self._expand(clique, remaining)
            elif len(clique) > len(self._best):
                self._best = list(clique)
                logger.debug('[*] Clique of size %d found', len(clique))
            clique.pop()
            candidates &= ~(1 << v)

    def _contains_clique(self, candidates, size):
        if size == 0:
            return True
        self._tick()
        order, bounds = self._colour_sort(candidates)
        for index in range(len(order) - 1, -1, -1):
            if bounds[index] < size:
                return False
            v = order[index]
            if self._contains_clique(candidates & self._adjacency[v],
                                     size - 1):
                return True
            candidates &= ~(1 << v)
        return False

    def _smallest_clique(self, size):
        """Lexicographically smallest clique of the given size by label."""
        by_label = sorted(range(len(self._order)),
                          key=lambda v: self._order[v])
        later = [0] * len(by_label)
        mask = 0
        for v in reversed(by_label):
            later[v] = mask
            mask |= 1 << v
        chosen = []
        candidates = (1 << len(self._order)) - 1
        for v in by_label:
            if len(chosen) == size:
                break
            if not candidates >> v & 1:
                continue
            rest = candidates & self._adjacency[v] & later[v]
            if self._contains_clique(rest, size - len(chosen) - 1):
                chosen.append(v)
                candidates = rest
        return chosen

    def solve(self):
        """Run the search.

        Among maximum cliques the one reported is the smallest in
        lexicographic order of its sorted labels. When the budget runs out
        the best clique found so far is reported as is.

        Returns:
            clique: Sorted node labels of the best clique found.
            optimal: True if the search completed within the budget.
        """
        self._nodes = 0
        if not self._order:
            return [], True
        self._best = self._greedy_clique()
        self._deadline = (None if self._budget is None
                          else time.monotonic() + self._budget)
        optimal = True
        try:
            self._expand([], (1 << len(self._order)) - 1)
        except _BudgetExhausted:
            optimal = False
            logger.warning('[!] Clique search budget exhausted after %d '
                           'nodes; best size %d', self._nodes,
                           len(self._best))
        if optimal:
            try:
                self._best = self._smallest_clique(len(self._best))
            except _BudgetExhausted:
                logger.warning('[!] Clique search budget exhausted while '
                               'selecting the smallest maximum clique')
        clique = sorted(self._order[v] for v in self._best)
        return clique, optimal
