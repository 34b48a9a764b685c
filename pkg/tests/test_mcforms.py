from fractions import Fraction

from hypothesis import given, settings

from nilgrad.liecore import heisenberg, jacobi_violations
from nilgrad.mcforms import MaurerCartanForm, d_squared, lie_to_mc, mc_convert, mc_to_lie
from nilgrad.models import make
from conftest import nilpotent_laws


def test_heisenberg_form():
    g = mc_to_lie(MaurerCartanForm.build([1, 2, 3], {3: [(1, 2, 1)]}))
    assert g == heisenberg()


def test_round_trip_Q4():
    g = make("Q:m=4")
    assert mc_to_lie(lie_to_mc(g)) == g


@settings(max_examples=25, deadline=None)
@given(nilpotent_laws(3, 6))
def test_round_trip_random(g):
    assert mc_convert(mc_convert(g)) == g
    assert not d_squared(lie_to_mc(g))


def test_non_closed_form_reports_defect():
    # filiform chain with one wrong coefficient in the top form
    f = MaurerCartanForm.build([1, 2, 3, 4, 5, 6], {3: [(1, 2, 1)], 4: [(1, 3, 1)], 5: [(1, 4, 1)],
                                                   6: [(1, 5, 1), (2, 5, 1), (3, 4, 1)]})
    g = mc_to_lie(f)
    assert d_squared(f)
    assert jacobi_violations(g)
    fixed = MaurerCartanForm.build([1, 2, 3, 4, 5, 6], {3: [(1, 2, 1)], 4: [(1, 3, 1)], 5: [(1, 4, 1)],
                                                       6: [(1, 5, 1), (2, 5, 1), (3, 4, -1)]})
    assert not d_squared(fixed) and not jacobi_violations(mc_to_lie(fixed))


def test_sign_convention():
    g = mc_to_lie(MaurerCartanForm.build([1, 2, 3], {3: [(1, 2, Fraction(-5, 2))]}))
    assert g.basis_bracket(0, 1) == {2: Fraction(-5, 2)}
