from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    """Size ceilings for the brute-force computations.

    ``max_arity`` caps both arities of an Ext query; ``max_star_arity``
    caps the middle arity of the partition composition, whose cost is a
    sum over the whole symmetric group on that many letters.
    """

    max_arity: int = 6
    max_star_arity: int = 9
    jobs: int = 1

    @classmethod
    def from_env(cls, **overrides) -> "Bounds":
        env = {
            "max_arity": os.environ.get("SCOMPROP_MAX_ARITY"),
            "max_star_arity": os.environ.get("SCOMPROP_MAX_STAR_ARITY"),
            "jobs": os.environ.get("SCOMPROP_JOBS"),
        }
        kwargs = {k: int(v) for k, v in env.items() if v}
        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kwargs)
