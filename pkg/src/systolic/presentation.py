"""Edge-path group presentations and Tietze reduction.

Generators are the 1-simplices outside a BFS spanning tree, relators come
from the 2-simplices.  Words are lists of nonzero ints: ``g`` is generator
``g`` and ``-g`` its inverse.
"""
from __future__ import annotations

from collections import deque

from .complex import SimplicialComplex


def free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def cyclic_reduce(word):
    word = free_reduce(word)
    i, j = 0, len(word) - 1
    while i < j and word[i] == -word[j]:
        i += 1
        j -= 1
    return word[i:j + 1]


def inverse(word):
    return [-x for x in reversed(word)]


class Presentation:
    def __init__(self, generators, relators):
        self.generators = set(generators)
        self.relators = [r for r in (cyclic_reduce(r) for r in relators) if r]
        self.moves = 0

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    def _pick(self):
        best = None
        for idx, r in enumerate(self.relators):
            if best is not None and len(r) >= best[0]:
                continue
            counts: dict = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            singles = [g for g, c in counts.items() if c == 1]
            if singles:
                best = (len(r), idx, min(singles))
                if len(r) == 1:
                    break
        return best

    def reduce(self, budget: int, max_length: int = 100_000) -> str:
        """Eliminate generators until none remain or no move applies.

        Returns ``"trivial"``, ``"budget exhausted"``, ``"stuck"`` or ``"blowup"``.
        """
        while True:
            if not self.generators:
                return "trivial"
            if self.moves >= budget:
                return "budget exhausted"
            pick = self._pick()
            if pick is None:
                return "stuck"
            _, idx, g = pick
            r = self.relators.pop(idx)
            pos = next(i for i, x in enumerate(r) if abs(x) == g)
            rest = r[pos + 1:] + r[:pos]  # rest * r[pos] is a cyclic conjugate of r
            value = inverse(rest) if r[pos] > 0 else rest
            value_inv = inverse(value)
            new = []
            for rel in self.relators:
                if any(abs(x) == g for x in rel):
                    out = []
                    for x in rel:
                        if x == g:
                            out.extend(value)
                        elif x == -g:
                            out.extend(value_inv)
                        else:
                            out.append(x)
                    rel = cyclic_reduce(out)
                    if len(rel) > max_length:
                        return "blowup"
                if rel:
                    new.append(rel)
            self.relators = new
            self.generators.discard(g)
            self.moves += 1


def spanning_tree_edges(X: SimplicialComplex) -> set:
    if X.is_empty:
        return set()
    adj = X.adjacency
    root = X.vertices[0]
    seen = {root}
    tree = set()
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(adj[u]):
            if w not in seen:
                seen.add(w)
                tree.add((min(u, w), max(u, w)))
                queue.append(w)
    return tree


def edge_path_presentation(X: SimplicialComplex) -> Presentation:
    tree = spanning_tree_edges(X)
    gen_of = {}
    for e in X.edges:
        if e not in tree:
            gen_of[e] = len(gen_of) + 1

    def letter(a, b):
        if a < b:
            g = gen_of.get((a, b))
            return [g] if g else []
        g = gen_of.get((b, a))
        return [-g] if g else []

    relators = []
    for a, b, c in X.simplices_of_dim(2):
        relators.append(letter(a, b) + letter(b, c) + letter(c, a))
    return Presentation(gen_of.values(), relators)
