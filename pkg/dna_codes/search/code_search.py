"""Largest codes of given length and distance by maximum clique search.

In dna mode the vertices are reverse complementary pairs {x, x~} with
x != x~, adjacent when all four cross similarities stay at most n-D-1;
the code size is twice the clique size. In distance-only mode the
vertices are single sequences.
"""
import enum
import time
import logging
from dataclasses import dataclass

import numpy as np
import networkx as nx

from dna_codes.config import Config, check_enumeration
from dna_codes.errors import InvalidArgumentError
from dna_codes.sequences.qary_sequence import (
    check_alphabet, all_sequences_array, reverse_complement_array,
    array_to_sequences)
from dna_codes.similarity.similarity import SimilarityKind
from dna_codes.similarity.batch import pair_similarities, similarity_matrix
from dna_codes.search.max_clique import MaxCliqueSolver

logger = logging.getLogger(__name__)


class SearchMode(enum.Enum):
    DNA = 'dna'
    DISTANCE_ONLY = 'distance-only'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidArgumentError(
                'unknown search mode {!r}, expected dna or distance-only'
                .format(value))


@dataclass(frozen=True)
class SearchResult:
    """Outcome of max_code.

    Among optimal codes the one reported has the lexicographically
    smallest sorted list of clique vertices, vertices being numbered in
    canonical sequence order.
    """
    code: tuple
    size: int
    optimal: bool
    elapsed: float
    mode: SearchMode
    q: int
    n: int
    distance: int
    kind: SimilarityKind
    nodes: int = 0
    vertices: int = 0

    def to_dict(self):
        return {
            'size': self.size,
            'optimal': self.optimal,
            'elapsed': self.elapsed,
            'mode': self.mode,
            'q': self.q,
            'n': self.n,
            'distance': self.distance,
            'kind': self.kind,
            'nodes': self.nodes,
            'vertices': self.vertices,
            'code': list(self.code),
        }


def compatibility_graph(q, n, distance, kind, mode):
    """Build the graph whose cliques are the admissible codes.

    Returns:
        graph: networkx.Graph on vertices 0..V-1, in canonical order.
        labels: List of V tuples, the sequences each vertex stands for.
    """
    threshold = n - distance - 1
    words = all_sequences_array(q, n)
    if mode is SearchMode.DISTANCE_ONLY:
        compatible = similarity_matrix(words, words, kind) <= threshold
        labels = [(x,) for x in array_to_sequences(words, q)]
    else:
        complements = reverse_complement_array(words, q)
        powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
        complement_index = complements.astype(np.int64) @ powers
        # One vertex per pair; self reverse complementary words drop out
        keep = np.arange(len(words)) < complement_index
        keep &= pair_similarities(words, complements, kind) <= threshold
        first, second = words[keep], complements[keep]
        pairs = len(first)
        stacked = np.vstack([first, second])
        matrix = similarity_matrix(stacked, stacked, kind)
        cross = np.maximum(
            np.maximum(matrix[:pairs, :pairs], matrix[:pairs, pairs:]),
            np.maximum(matrix[pairs:, :pairs], matrix[pairs:, pairs:]))
        compatible = cross <= threshold
        labels = list(zip(array_to_sequences(first, q),
                          array_to_sequences(second, q)))

    graph = nx.Graph()
    graph.add_nodes_from(range(len(labels)))
    rows, cols = np.nonzero(np.triu(compatible, k=1))
    graph.add_edges_from(zip(rows.tolist(), cols.tolist()))
    return graph, labels


def max_code(q, n, distance, kind, mode=SearchMode.DNA, budget=None,
             enumeration_cap=None):
    """Search for a largest code.

    Inputs:
        q, n: Alphabet size and length.
        distance: Distance D, 1 <= D <= n-1.
        kind: SimilarityKind or its name.
        mode: SearchMode or its name.
        budget: Seconds allowed, the configured budget when omitted.
        enumeration_cap: Largest q^n searched, also bounding the q^(2n)
            similarity pairs of the compatibility graph.

    Returns:
        result: SearchResult; optimal is False when the budget ran out and
            the code is then the best one found.
    """
    q = check_alphabet(q)
    kind = SimilarityKind.parse(kind)
    mode = SearchMode.parse(mode)
    if not 1 <= distance <= n - 1:
        raise InvalidArgumentError(
            'distance D must satisfy 1 <= D <= n-1, got {}'.format(distance))
    budget = Config.SEARCH_BUDGET if budget is None else budget
    if budget <= 0:
        raise InvalidArgumentError('search budget must be positive')
    check_enumeration('code search over A^{} (q = {})'.format(n, q), q ** n,
                      enumeration_cap)
    # The compatibility graph holds a dense matrix over all vertex pairs
    check_enumeration('compatibility graph over (A^{})^2 (q = {})'.format(
        n, q), q ** (2 * n), enumeration_cap)

    start = time.monotonic()
    graph, labels = compatibility_graph(q, n, distance, kind, mode)
    logger.info('[*] Compatibility graph: %d vertices, %d edges',
                graph.number_of_nodes(), graph.number_of_edges())
    remaining = max(budget - (time.monotonic() - start), 1e-3)
    solver = MaxCliqueSolver(graph, budget=remaining)
    clique, optimal = solver.solve()
    code = tuple(sorted(x for v in clique for x in labels[v]))
    elapsed = time.monotonic() - start
    logger.info('[*] Search finished: size %d, optimal %s, %.2f s',
                len(code), optimal, elapsed)
    return SearchResult(
        code=code, size=len(code), optimal=optimal, elapsed=elapsed,
        mode=mode, q=q, n=n, distance=distance, kind=kind,
        nodes=solver.nodes, vertices=graph.number_of_nodes())
