from __future__ import annotations

from dataclasses import dataclass

from app.core.errors import InputError


@dataclass(frozen=True)
class K0Class:
    """Element of K₀ of the wide subcategory on a support of Spec ℤ.

    For the full spectrum the single coordinate is the free rank; for a finite
    set of primes there is one p-length coordinate per prime, in ascending order.
    """

    full: bool
    primes: tuple[int, ...] = ()
    coords: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.full:
            if self.primes or len(self.coords) != 1:
                raise InputError("a class over the full spectrum has exactly one coordinate")
            return
        if list(self.primes) != sorted(set(self.primes)):
            raise InputError(f"primes must be distinct and ascending, got {list(self.primes)}")
        if len(self.coords) != len(self.primes):
            raise InputError(
                f"{len(self.primes)} primes need {len(self.primes)} coordinates, got {len(self.coords)}"
            )

    @classmethod
    def zero_full(cls) -> "K0Class":
        return cls(True, (), (0,))

    @classmethod
    def zero_over(cls, primes: tuple[int, ...]) -> "K0Class":
        return cls(False, primes, (0,) * len(primes))

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check_compatible(self, other: "K0Class") -> None:
        if self.full != other.full or self.primes != other.primes:
            raise InputError("classes live in Grothendieck groups of different supports")

    def __add__(self, other: "K0Class") -> "K0Class":
        self._check_compatible(other)
        return K0Class(self.full, self.primes, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "K0Class":
        return K0Class(self.full, self.primes, tuple(-a for a in self.coords))

    def __sub__(self, other: "K0Class") -> "K0Class":
        return self + (-other)

    def scaled(self, factor: int) -> "K0Class":
        return K0Class(self.full, self.primes, tuple(factor * a for a in self.coords))

    def __str__(self) -> str:
        if self.full:
            return f"[{self.coords[0]}] in K0(full)"
        pairs = ", ".join(f"{p}:{c}" for p, c in zip(self.primes, self.coords))
        return f"({pairs}) in K0"
