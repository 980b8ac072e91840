"""Size guards for the exponential procedures.

Setting ``GLICCI_GUARD_N`` in the environment replaces every vertex-count
guard at once.
"""

import os

from .errors import SizeGuardExceeded

DEFAULT_GUARDS = {
    "hochster_n": 20,
    "sdepth_n": 10,
    "partition_n": 10,
    "any_labeling_n": 8,
    "shelling_facets": 20,
    "census_n": 7,
}


def guard(name: str) -> int:
    override = os.environ.get("GLICCI_GUARD_N")
    if override and not name.endswith("_facets"):
        return int(override)
    return DEFAULT_GUARDS[name]


def check(name: str, value: int, limit: int | None = None) -> None:
    limit = guard(name) if limit is None else limit
    if value > limit:
        raise SizeGuardExceeded(f"{name}: {value} exceeds guard {limit}")
