"""Exact representation fixtures used across test modules."""
from functools import lru_cache

from cliffrep.algebra import Matrix
from cliffrep.clifford import (
    Form,
    Representation,
    clock_shift_form,
    construct_clock_shift,
    construct_tensor_diagonal,
    direct_sum,
    split,
)


@lru_cache(maxsize=None)
def fermat_split():
    return split(construct_tensor_diagonal(3, 3), seed=0)


def exact_fixtures():
    """(label, rep, form) for representations known to verify."""
    cs2, cs3, cs4 = (construct_clock_shift(d) for d in (2, 3, 4))
    out = [
        ("clock-shift d=2", cs2, clock_shift_form(2)),
        ("clock-shift d=3", cs3, clock_shift_form(3)),
        ("clock-shift d=4", cs4, clock_shift_form(4)),
        ("tensor d=2 n=3", construct_tensor_diagonal(2, 3), Form.fermat(3, 2)),
        ("sum of clock-shift d=3", direct_sum(cs3, cs3), clock_shift_form(3)),
        ("tensor d=3 n=3", construct_tensor_diagonal(3, 3), Form.fermat(3, 3)),
    ]
    for k, part in enumerate(fermat_split().parts):
        out.append((f"fermat split part {k}", part, Form.fermat(3, 3)))
    return out


def rotation_n1():
    """[[0,-1],[1,0]] over Q: represents -x^2, reducible only over Q(i)."""
    return Representation((Matrix([[0, -1], [1, 0]], 1),))
