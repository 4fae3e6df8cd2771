"""Reset every per-process memo, for cold-start timings."""
from . import combinatorics, group_algebra, partition_cat

_CACHED = (
    combinatorics.compositions,
    combinatorics._surjections,
    combinatorics._partitions,
    group_algebra.e_sign,
    group_algebra.e_triv,
    group_algebra._young,
    partition_cat._star_basis,
    partition_cat.p_element,
)


def clear_caches() -> None:
    for fn in _CACHED:
        fn.cache_clear()
