"""Dyadic segment machinery: per-job partitions of [r, T] and their laws.

Each job's tail [r_j, T] is partitioned into dyadic intervals with at most
two per level and weakly increasing levels; the partitions of jobs released
later sit inside those of jobs released earlier (nesting), which is what
makes the forest reduction work.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import WftInstance
from .errors import ReleaseOutOfRange, SlotBeforeRelease


@dataclass(frozen=True)
class DyadicSegment:
    """Interval [lo, lo + 2**level]; lo must be a multiple of 2**level."""

    lo: int
    level: int

    def __post_init__(self) -> None:
        if self.lo % (1 << self.level) != 0:
            raise ValueError(f"lo={self.lo} not aligned to level {self.level}")

    @property
    def hi(self) -> int:
        return self.lo + (1 << self.level)

    @property
    def length(self) -> int:
        return 1 << self.level

    def contains_slot(self, t: int) -> bool:
        return self.lo <= t < self.hi

    def contains(self, other: "DyadicSegment") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


@dataclass(frozen=True)
class JobSegment:
    """A (job, dyadic segment) pair with its cost contribution."""

    job: str
    seg: DyadicSegment
    weight: int


def form_segments(r: int, T: int) -> tuple[DyadicSegment, ...]:
    """Partition [r, T] into dyadic segments, two per level at most.

    Level-s iteration appends one segment (or two when the cursor is
    aligned to 2**(s+1)); the loop stops the moment the cursor reaches T,
    checking after each individual append so no segment leaves [0, T].
    """
    if T < 1 or (T & (T - 1)) != 0:
        raise ReleaseOutOfRange(f"horizon {T} is not a power of two")
    if not 0 <= r < T:
        raise ReleaseOutOfRange(f"release {r} outside [0, {T})")
    segs: list[DyadicSegment] = []
    t = r
    s = 0
    while t < T:
        if t % (1 << (s + 1)) == 0:
            segs.append(DyadicSegment(t, s))
            t += 1 << s
            if t >= T:
                break
            segs.append(DyadicSegment(t, s))
            t += 1 << s
        else:
            segs.append(DyadicSegment(t, s))
            t += 1 << s
        s += 1
    return tuple(segs)


def segment_containing(seglist: tuple[DyadicSegment, ...], t: int) -> DyadicSegment:
    """The unique segment whose interval contains slot t."""
    if not seglist or t < seglist[0].lo:
        raise SlotBeforeRelease(f"slot {t} precedes the first segment")
    for seg in seglist:
        if seg.contains_slot(t):
            return seg
    raise ValueError(f"slot {t} beyond the horizon {seglist[-1].hi}")


def job_segments(
    inst: WftInstance, lp_exponent: int = 1
) -> dict[str, tuple[JobSegment, ...]]:
    """Seg(j) for every job of a padded instance, with weights (w_j * len)**p."""
    out: dict[str, tuple[JobSegment, ...]] = {}
    for job in inst.jobs:
        segs = form_segments(job.r, inst.T)
        out[job.id] = tuple(
            JobSegment(job.id, seg, (job.w * seg.length) ** lp_exponent)
            for seg in segs
        )
    return out


def check_nesting(
    inst: WftInstance, seglists: dict[str, tuple[DyadicSegment, ...]]
) -> bool:
    """Nesting law: at any shared slot, the earlier-released job's segment
    has level at least the later one's.  Must always hold; used as a
    post-construction self-check."""
    jobs = inst.jobs  # already in release order
    for a in range(len(jobs)):
        for b in range(a + 1, len(jobs)):
            early, late = jobs[a], jobs[b]
            for t in range(late.r, inst.T):
                seg_early = segment_containing(seglists[early.id], t)
                seg_late = segment_containing(seglists[late.id], t)
                if seg_early.level < seg_late.level:
                    return False
    return True
