"""Particle-hole excitation descriptors shared by the finite chain and the
Luttinger-liquid side."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ParticleHoleConfig:
    """Excitation above the shifted state lambda(m).

    Offsets are integers in units of 2 pi / L measured from the Fermi
    points.  Right branch: particles ``p > 0`` above the top occupied level,
    holes ``q <= 0`` (``q = 0`` is the top occupied level).  Left branch:
    particles ``p < 0`` below the bottom occupied level, holes ``q >= 0``.
    Particles and holes are paired by position in each list.
    """

    m: int = 0
    right: tuple[tuple[int, int], ...] = field(default_factory=tuple)
    left: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "right", tuple(tuple(pair) for pair in self.right))
        object.__setattr__(self, "left", tuple(tuple(pair) for pair in self.left))
        if self.m < 0:
            raise ValueError("m must be >= 0")
        for p, q in self.right:
            if not (p > 0 and q <= 0):
                raise ValueError(f"right branch needs p > 0, q <= 0; got ({p}, {q})")
        for p, q in self.left:
            if not (p < 0 and q >= 0):
                raise ValueError(f"left branch needs p < 0, q >= 0; got ({p}, {q})")
        for name, pairs in (("right", self.right), ("left", self.left)):
            ps = [p for p, _ in pairs]
            qs = [q for _, q in pairs]
            if len(set(ps)) != len(ps) or len(set(qs)) != len(qs):
                raise OverlapError(f"repeated particle or hole offset on the {name} branch")

    @property
    def right_particles(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.right)

    @property
    def right_holes(self) -> tuple[int, ...]:
        return tuple(q for _, q in self.right)

    @property
    def left_particles(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.left)

    @property
    def left_holes(self) -> tuple[int, ...]:
        return tuple(q for _, q in self.left)

    @property
    def max_offset(self) -> int:
        offsets = [abs(v) for pair in self.right + self.left for v in pair]
        return max(offsets, default=0)


class OverlapError(ValueError):
    """Particle or hole offsets collide."""
