import dataclasses

import pytest

from isoclass import Curve, FrobeniusData, PrimeField, frobenius_from_trace


@dataclasses.dataclass(frozen=True)
class IsogenyClassFixture:
    q: int
    t: int
    curves: tuple  # (A, B) pairs
    conductors: tuple
    frob: FrobeniusData

    def curve(self, i: int) -> Curve:
        a, b = self.curves[i]
        return Curve(PrimeField(self.q), a, b)

    def all_curves(self) -> list:
        return [self.curve(i) for i in range(len(self.curves))]


def _fixture(q, t, curves, conductors):
    return IsogenyClassFixture(q, t, tuple(curves), tuple(conductors), frobenius_from_trace(q, t))


# Three worked isogeny classes with known conductors and patterns.
# tau = 25 + 52*sqrt(-1); six curves, pairwise patterns all "none" or "k odd".
EXAMPLE1 = _fixture(
    3329, 50,
    [(49, 0), (1, 57), (1, 98), (1, 378), (3, 1152), (30, 351)],
    [1, 52, 13, 26, 2, 4],
)

# tau = 52 + 25*sqrt(-1); patterns involve p = 5 with e = 4.
EXAMPLE2 = _fixture(
    3329, 104,
    [(99, 0), (1, 72), (1, 192)],
    [1, 25, 5],
)

# tau = -17 + 14*(1+sqrt(-19))/2; v_2(b) = 1 exercises the halving step.
EXAMPLE3 = _fixture(
    1031, -20,
    [(982, 824), (1, 13), (1, 89), (168, 48)],
    [7, 1, 14, 2],
)


@pytest.fixture(params=[EXAMPLE1, EXAMPLE2, EXAMPLE3], ids=["ex1", "ex2", "ex3"])
def example(request):
    return request.param
