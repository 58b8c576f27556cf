from collections import Counter

import pytest

from watermelons.core import DomainError, WatermelonSpec
from watermelons.lgv import n_fixed_contacts
from watermelons.oracle import PathFamily, check_family, enumerate_families
from watermelons.tableaux import (
    SemistandardTableau,
    jt_slide,
    jt_star_slide,
    prop6_forward,
    prop6_inverse,
    prop6_trace,
    second_set_ends,
    tableau_to_walkers,
    walkers_to_tableau,
)

T = SemistandardTableau.from_rows

START_TAB = T([[1, 2, 2, 6], [4, 6, 6, 7], [6, 7, 7, 8], [7, 8, 9, 10], [9, 9, 11, 11]])
FIRST_SLIDE_TAB = T([[1, 2, 2, 6], [4, 6, 6, 7], [6, 7, 7, 8], [7, 8, 9, 10], [10, 12, 12, 9]])
AFTER_DELETIONS_TAB = T([[3, 3, 5, 6], [4, 6, 6, 7], [6, 7, 9], [9, 10, 11], [10, 12, 12]])
IMAGE_TAB = T([[2, 2, 4, 5], [3, 5, 5, 6], [5, 6, 8], [8, 9, 10], [9, 11, 11]])
WORKED_FAMILY = PathFamily.from_strings("UDUUDUDDUDUU", "UUDUUUDDDDUU", "UUDUUUDDUDUD", "UUUUUUDDDUDD")
WORKED_IMAGE = PathFamily.from_strings("UUDDUDUUDDUU", "UUDUUDDUUDUD", "UUUUDDUUDUDD", "UUUUUDDU")
SPEC = WatermelonSpec(4, 12, 2)


def test_dictionary_on_worked_example():
    assert walkers_to_tableau(SPEC, WORKED_FAMILY) == START_TAB
    assert tableau_to_walkers(START_TAB, (12,) * 4) == WORKED_FAMILY
    assert tableau_to_walkers(IMAGE_TAB, second_set_ends(SPEC, 3)[2]) == WORKED_IMAGE
    assert walkers_to_tableau(WatermelonSpec(1, 2, 0), PathFamily.from_strings("UD")) == T([[1]])


def test_first_slide_of_worked_example():
    tab, pos = jt_slide(START_TAB, (4, 0))
    assert tab == FIRST_SLIDE_TAB and pos == (4, 3)


def test_trivial_slides():
    assert jt_slide(T([[5]]), (0, 0)) == (T([[5]]), (0, 0))
    assert jt_slide(T([[3], [7]]), (0, 0))[0] == T([[6], [3]])


def test_worked_example_bit_exact():
    ell, trace = prop6_trace(SPEC, WORKED_FAMILY)
    assert ell == 3
    assert trace[0] == START_TAB and trace[1] == FIRST_SLIDE_TAB
    assert trace[-2] == AFTER_DELETIONS_TAB and trace[-1] == IMAGE_TAB
    assert prop6_forward(SPEC, WORKED_FAMILY) == WORKED_IMAGE
    assert prop6_inverse(SPEC, WORKED_IMAGE) == WORKED_FAMILY


def test_jt_star_undoes_last_round():
    tab = AFTER_DELETIONS_TAB
    cols = [list(c) for c in tab.columns]
    cols[-1].append(0)
    back, pos = jt_star_slide(SemistandardTableau(cols), (2, 3))
    assert pos == (0, 0)
    assert back.rows[0] == (1, 2, 2, 6)


def test_ell0_and_single_walker():
    spec = WatermelonSpec(2, 6, 2)
    fam = PathFamily.from_strings("UUUDUD", "UUUUDD")
    ell, trace = prop6_trace(spec, fam)
    assert ell == 0 and trace[-1] == trace[0].add(-1)
    one = WatermelonSpec(1, 2, 0)
    img = prop6_forward(one, PathFamily.from_strings("UD"))
    assert img.paths == ((),)
    assert prop6_inverse(one, img) == PathFamily.from_strings("UD")


def test_bad_inverse_input():
    with pytest.raises(DomainError):
        prop6_inverse(SPEC, WORKED_FAMILY)


def test_pretty():
    assert IMAGE_TAB.pretty().splitlines()[2] == " 5  6  8"


GRID = [(n, t, y) for n in range(1, 4) for y in range(3) for t in range(max(y, 1), 11) if (t - y) % 2 == 0]


@pytest.mark.parametrize("n,t,y", GRID)
def test_round_trip_and_cardinality(n, t, y):
    spec = WatermelonSpec(n, t, y)
    first, second = Counter(), Counter()
    images = set()
    for fam in enumerate_families(spec):
        ell, trace = prop6_trace(spec, fam)
        first[ell] += 1
        assert all(tab.is_semistandard() for tab in trace[::2][:-1])
        img = prop6_forward(spec, fam)
        starts, ends, _ = second_set_ends(spec, ell)
        check_family(starts, ends, img)
        images.add(img)
        second[ell] += 1
        assert prop6_inverse(spec, img) == fam
    assert len(images) == sum(first.values())
    for ell in range(spec.downs + 1):
        assert first[ell] == second[ell] == n_fixed_contacts(t, y, n, ell)
