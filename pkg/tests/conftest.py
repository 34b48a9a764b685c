import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from nilgrad.cohomology import TwoCochain, cocycle_space
from nilgrad.extensions import central_extend
from nilgrad.liecore import LieAlgebra, abelian


def random_nilpotent(seed: int, dim: int, start: int = 2) -> LieAlgebra:
    """Jacobi-closed nilpotent law built by random central extensions of an abelian algebra."""
    rng = random.Random(seed)
    g = abelian(start).with_degrees(None)
    while g.dim < dim:
        z = cocycle_space(g)
        coeffs = [rng.randint(-2, 2) for _ in z.basis]
        v = [sum((c * b[t] for c, b in zip(coeffs, z.basis)), Fraction(0)) for t in range(z.ambient_dim)]
        g = central_extend(g, TwoCochain.from_vector(g.dim, v))
    return g


@st.composite
def nilpotent_laws(draw, min_dim=3, max_dim=6):
    dim = draw(st.integers(min_dim, max_dim))
    seed = draw(st.integers(0, 10 ** 6))
    return random_nilpotent(seed, dim)


def rational_matrices(max_rows=5, max_cols=5):
    entry = st.fractions(min_value=-6, max_value=6, max_denominator=4)
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r)))


@pytest.fixture(params=["cython", "python"])
def backend(request):
    from nilgrad import kernel
    if request.param not in kernel.available_backends():
        pytest.skip("compiled kernel not built")
    prev = kernel.set_backend(request.param)
    yield request.param
    kernel.set_backend(prev)
