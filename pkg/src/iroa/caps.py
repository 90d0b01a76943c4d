from dataclasses import asdict, dataclass

DEFAULT_ENUM_CAP = 2**24
DEFAULT_SUBSET_CAP = 10**6
DEFAULT_SPACE_CAP = 2**24
DEFAULT_PAIR_CAP = 10**8
DEFAULT_SEARCH_CAP = 10**6
DEFAULT_SAMPLES = 256


@dataclass(frozen=True)
class Caps:
    """Work limits for the exhaustive kernels.

    ``samples`` is the number of random column subsets inspected when a
    projection check falls back to sampled mode.
    """

    enum: int = DEFAULT_ENUM_CAP
    subsets: int = DEFAULT_SUBSET_CAP
    space: int = DEFAULT_SPACE_CAP
    pairs: int = DEFAULT_PAIR_CAP
    search: int = DEFAULT_SEARCH_CAP
    samples: int = DEFAULT_SAMPLES

    def __post_init__(self):
        for name, value in asdict(self).items():
            if value <= 0:
                raise ValueError(f"cap {name!r} must be positive, got {value}")

    def to_dict(self):
        return asdict(self)


DEFAULT_CAPS = Caps()
