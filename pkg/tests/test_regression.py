"""Frozen reference values for the default channel (kappa=0.01, N_B=1).

These pin the end-to-end pipeline (ladder build, channel, Chernoff search)
so that refactors cannot drift silently.
"""

import pytest

import shared
from qillume.probes import Op, ProbeSpec

Q_AT_N5 = {
    "ADD_BOTH": 0.9843765191707786,
    "ADD_SIGNAL": 0.9899892830052711,
    "SUB_BOTH": 0.9924144314810828,
    "ADD_IDLER": 0.996921341608016,
}


def test_tmsv_reference():
    assert shared.q(ProbeSpec(Op.TMSV, x=0.2)) == pytest.approx(0.9992675906737264, abs=1e-9)


@pytest.mark.parametrize("op", sorted(Q_AT_N5))
def test_family_reference(op):
    assert shared.q(shared.family(op, 5)) == pytest.approx(Q_AT_N5[op], abs=1e-9)
