import functools
import os
import random
import sys
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from liecontract.builders import builtin_algebra as _builtin_algebra  # noqa: E402
from liecontract.builders import symmetric_pair as _symmetric_pair  # noqa: E402
from liecontract.polyring import Polynomial  # noqa: E402

# algebras are immutable, so tests may share one instance per builtin
cached_builtin = functools.lru_cache(maxsize=None)(_builtin_algebra)
cached_pair = functools.lru_cache(maxsize=None)(_symmetric_pair)


def random_polynomial(rng: random.Random, n: int, max_degree: int = 3,
                      max_terms: int = 5, allow_zero: bool = True) -> Polynomial:
    terms = []
    for _ in range(rng.randint(0 if allow_zero else 1, max_terms)):
        mono = {}
        for _ in range(rng.randint(0, max_degree)):
            v = rng.randrange(n)
            mono[v] = mono.get(v, 0) + 1
        coeff = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        terms.append((tuple(sorted(mono.items())), coeff))
    return Polynomial(n, terms)


def random_point(rng: random.Random, n: int):
    return [Fraction(rng.randint(-8, 8), rng.randint(1, 5)) for _ in range(n)]
