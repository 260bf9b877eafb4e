"""
Named DSP instances
The identity-matrix example, the DSP_n family with large price of stability,
and the small local-expert fixtures used by the tests.
"""

from fractions import Fraction
from typing import Iterable, Optional

from ..dsp_instance import DSPInstance
from ..exceptions import InstanceError
from ..partition import Partition

WIRINGS = ("pairs", "expert")


def local_expert_partition(n: int, expert_items: Iterable[int]) -> Partition:
    """{{j} for j in I_t} plus the remainder part, omitted when empty."""
    known = sorted(set(expert_items))
    rest = tuple(j for j in range(n) if j not in set(known))
    parts = tuple((j,) for j in known) + ((rest,) if rest else ())
    return Partition(parts)


def _pair_wiring(size: int):
    first, second = [], []
    for block in range(0, size, 4):
        a, b, c, d = block, block + 1, block + 2, block + 3
        first += [(a, b), (c, d)]
        second += [(a, c), (b, d)]
    return [Partition(tuple(first)), Partition(tuple(second))]


def gen_identity(size: int, value=1, wiring: Optional[str] = None,
                 name: Optional[str] = None) -> DSPInstance:
    """
    Uniform prior, V = value * identity.

    wiring="pairs" (sizes divisible by 4) gives two mediators, one pairing
    items {0,1},{2,3} and the other {0,2},{1,3}, block by block.
    wiring="expert" gives one fully informed mediator. The default is
    "pairs" whenever the size allows it.
    """
    if size < 1:
        raise InstanceError(f"identity size must be at least 1, got {size}")
    if wiring is None:
        wiring = "pairs" if size % 4 == 0 else "expert"
    if wiring not in WIRINGS:
        raise ValueError(f"Unknown wiring: {wiring}")
    if wiring == "pairs" and size % 4 != 0:
        raise InstanceError(f"pair wiring needs a size divisible by 4, got {size}")

    value = Fraction(value)
    valuations = [[value if i == j else Fraction(0) for j in range(size)] for i in range(size)]
    mediators = _pair_wiring(size) if wiring == "pairs" else [Partition.singletons(size)]
    return DSPInstance([1] * size, valuations, mediators,
                       name=name or f"identity{size}").validate()


def ident4(value=1) -> DSPInstance:
    return gen_identity(4, value, wiring="pairs", name="IDENT4")


def loc2() -> DSPInstance:
    return DSPInstance([1, 1], [[10, 0], [0, 8]], [Partition.singletons(2)],
                       bidder_names=["A", "B"], name="LOC2").validate()


def loc3() -> DSPInstance:
    return DSPInstance([1, 1, 1], [[9, 0, 0], [0, 6, 0], [0, 0, 6]],
                       [Partition.singletons(3)], name="LOC3").validate()


def trim5() -> DSPInstance:
    return DSPInstance([1] * 5, [[12, 0, 0, 0, 0], [0, 8, 8, 8, 8]],
                       [Partition.singletons(5)], name="TRIM5").validate()


def default_eps(n: int) -> Fraction:
    return Fraction(1, 2) if n == 1 else Fraction(1, n * n)


def gen_dspn(n: int, eps=None) -> DSPInstance:
    """
    DSP_n: items a_1..a_n, b_1..b_n, c_1..c_n, d with equal probabilities.

    Bidder iG values b items at eps and every other item at 1, iO values d
    only, and bidder i_l values b_l only. Mediator t1 knows the a and b
    items, t2 the b and c items.
    """
    if n < 1:
        raise InstanceError(f"DSP_n needs n >= 1, got {n}")
    eps = default_eps(n) if eps is None else Fraction(eps)
    if not 0 < eps < 1:
        raise InstanceError(f"eps must lie strictly between 0 and 1, got {eps}")

    a = list(range(n))
    b = list(range(n, 2 * n))
    c = list(range(2 * n, 3 * n))
    d = 3 * n
    items = 3 * n + 1

    greedy = [eps if j in b else Fraction(1) for j in range(items)]
    outside = [Fraction(1) if j == d else Fraction(0) for j in range(items)]
    locals_ = [[Fraction(1) if j == b[l] else Fraction(0) for j in range(items)] for l in range(n)]

    item_names = ([f"a{l + 1}" for l in range(n)] + [f"b{l + 1}" for l in range(n)]
                  + [f"c{l + 1}" for l in range(n)] + ["d"])
    return DSPInstance(
        [1] * items,
        [greedy, outside] + locals_,
        [local_expert_partition(items, a + b), local_expert_partition(items, b + c)],
        item_names=item_names,
        bidder_names=["iG", "iO"] + [f"i{l + 1}" for l in range(n)],
        mediator_names=["t1", "t2"],
        name=f"DSP_{n}",
    ).validate()


def dspn_equilibrium_value(n: int, eps=None) -> Fraction:
    """(n eps + 1) / (3n + 1), the value of every equilibrium of DSP_n."""
    eps = default_eps(n) if eps is None else Fraction(eps)
    return (n * eps + 1) / (3 * n + 1)


def dspn_optimum_bound(n: int) -> Fraction:
    """(n + 1) / (3n + 1), a lower bound on the optimal revenue of DSP_n."""
    return Fraction(n + 1, 3 * n + 1)
