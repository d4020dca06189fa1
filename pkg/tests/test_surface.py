import pytest

from crosscap.surface import (
    NegativeGenus,
    ParityError,
    Surface,
    classify_from_chi,
    euler,
    is_sporadic,
)


@pytest.mark.parametrize(
    "s, chi",
    [
        (Surface(False, 1, 0), 1),
        (Surface(True, 0, 3), -1),
        (Surface(False, 3, 2), -3),
        (Surface(True, 2, 0), -2),
    ],
)
def test_euler(s, chi):
    assert euler(s) == chi
    assert s.euler == chi


def test_classify_examples():
    assert classify_from_chi(True, -2, 0) == Surface(True, 2, 0)
    assert classify_from_chi(False, 0, 0) == Surface(False, 2, 0)
    with pytest.raises(ParityError):
        classify_from_chi(True, -1, 0)
    with pytest.raises(NegativeGenus):
        classify_from_chi(True, 4, 0)
    with pytest.raises(NegativeGenus):
        classify_from_chi(False, 1, 1)


def test_non_orientable_genus_positive():
    with pytest.raises(Exception):
        Surface(False, 0, 1)


def test_classify_inverts_euler():
    for orientable in (True, False):
        for g in range(0 if orientable else 1, 6):
            for n in range(5):
                s = Surface(orientable, g, n)
                assert classify_from_chi(orientable, euler(s), n) == s


def test_sporadic_list():
    listed = {(1, n) for n in range(5)} | {(2, n) for n in range(4)} | {(3, n) for n in range(3)}
    for g in range(1, 8):
        for n in range(8):
            assert is_sporadic(g, n) == ((g, n) in listed)
    assert is_sporadic(1, 4)
    assert is_sporadic(2, 3)
    assert not is_sporadic(3, 3)


def test_negative_euler_implies_large_g_plus_n():
    for g in range(1, 8):
        for n in range(8):
            if Surface(False, g, n).euler < 0:
                assert g + n > 2
