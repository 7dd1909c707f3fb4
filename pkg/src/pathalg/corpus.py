"""Seeded random corpus of acyclic bound quiver algebras.

Instances are acyclic by construction (arrows only go from lower to higher
vertex rank) and field-independent: relation coefficients are stored as
small integers and mapped into the working field when an algebra is built,
so the same seed exercises the same corpus over every field.  Path counts
are capped so each instance solves in well under a second.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import PathAlgebra, Relation, enumerate_paths
from .parser import RelationSpec, serialize_quiver
from .quiver import Quiver

COEFF_POOL = (1, -1, 2, -2)


@dataclass
class CorpusInstance:
    quiver: Quiver
    relation_specs: list  # RelationSpec with Fraction coefficients

    def build(self, field):
        rels = [Relation.from_spec(self.quiver, field, spec) for spec in self.relation_specs]
        return PathAlgebra(self.quiver, field, rels)

    def document(self):
        return serialize_quiver(self.quiver, self.relation_specs)

    @property
    def has_relations(self):
        return bool(self.relation_specs)


def random_instance(rng, max_vertices=8, max_arrows=12, max_relations=3, max_paths=40):
    """One random acyclic bound quiver, resampled until the path cap holds."""
    while True:
        nv = rng.randint(1, max_vertices)
        vertices = [str(i) for i in range(1, nv + 1)]
        arrows = []
        if nv >= 2:
            for t in range(rng.randint(0, max_arrows)):
                i = rng.randint(1, nv - 1)
                j = rng.randint(i + 1, nv)
                arrows.append((f"a{t + 1}", str(i), str(j)))
        quiver = Quiver(vertices, arrows)
        paths = enumerate_paths(quiver)
        if len(paths) > max_paths:
            continue
        groups = {}
        for p in paths:
            if p.length >= 2:
                groups.setdefault((p.source, p.target), []).append(p)
        parallel = sorted(groups.values(), key=lambda g: str(g[0]))
        specs = []
        count = rng.randint(0, max_relations) if parallel else 0
        for _ in range(count):
            g = rng.choice(parallel)
            if len(g) >= 2 and rng.random() < 0.6:
                p1, p2 = rng.sample(g, 2)
                terms = [
                    (Fraction(rng.choice(COEFF_POOL)), list(p1.arrows)),
                    (Fraction(rng.choice(COEFF_POOL)), list(p2.arrows)),
                ]
            else:
                terms = [(Fraction(1), list(rng.choice(g).arrows))]
            specs.append(RelationSpec(terms))
        return CorpusInstance(quiver, specs)


def generate(count, seed, max_vertices=8, max_arrows=12, max_relations=3, max_paths=40):
    """A deterministic list of corpus instances for a given seed."""
    rng = random.Random(seed)
    return [
        random_instance(rng, max_vertices, max_arrows, max_relations, max_paths)
        for _ in range(count)
    ]
