"""Instance model, schedules, objective evaluation, and canonical preprocessing.

Time is divided into unit slots; slot t is the interval [t, t+1].  A job's
completion time is one plus the last slot it owns, and its flow time is
completion minus release.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    EmptyInstance,
    InfeasibleSchedule,
    NegativeField,
    NonIntegralField,
    NonPositiveProcessing,
    ParseError,
)

FORMAT_TAG = "flowcut-v1"


@dataclass(frozen=True)
class Job:
    """One job: processing requirement p, weight w, release date r."""

    id: str
    p: int
    w: int
    r: int


@dataclass(frozen=True)
class WftInstance:
    """A validated scheduling instance.

    Invariants:
        - jobs are sorted by (release date, id); ids are unique
        - T == sum of processing requirements
    """

    jobs: tuple[Job, ...]
    T: int

    @property
    def n(self) -> int:
        return len(self.jobs)

    @property
    def processing_ratio(self) -> Fraction:
        """P: largest over smallest processing requirement."""
        ps = [j.p for j in self.jobs]
        return Fraction(max(ps), min(ps))

    def job(self, job_id: str) -> Job:
        for j in self.jobs:
            if j.id == job_id:
                return j
        raise KeyError(job_id)


@dataclass(frozen=True)
class Schedule:
    """Slot ownership: slots[t] is a job id or None (idle)."""

    slots: tuple[str | None, ...]

    def owned_slots(self, job_id: str) -> tuple[int, ...]:
        return tuple(t for t, owner in enumerate(self.slots) if owner == job_id)


def _check_int(name: str, value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise NonIntegralField(f"job field {name!r} must be an integer, got {value!r}")
    return value


def validate_instance(jobs: Iterable[Job]) -> WftInstance:
    """Validate jobs and fix the canonical order: by release date, ties by id."""
    job_list = list(jobs)
    if not job_list:
        raise EmptyInstance("instance has no jobs")
    seen: set[str] = set()
    for j in job_list:
        _check_int("p", j.p)
        _check_int("w", j.w)
        _check_int("r", j.r)
        if j.p < 1:
            raise NonPositiveProcessing(f"job {j.id!r} has p={j.p}")
        if j.r < 0 or j.w < 0:
            raise NegativeField(f"job {j.id!r} has negative w or r")
        if j.id in seen:
            raise ParseError(f"duplicate job id {j.id!r}")
        seen.add(j.id)
    job_list.sort(key=lambda j: (j.r, j.id))
    return WftInstance(jobs=tuple(job_list), T=sum(j.p for j in job_list))


def completion_times(inst: WftInstance, schedule: Schedule) -> dict[str, int]:
    """Per-job completion times; raises InfeasibleSchedule on any violation."""
    by_id = {j.id: j for j in inst.jobs}
    owned: dict[str, list[int]] = {j.id: [] for j in inst.jobs}
    for t, owner in enumerate(schedule.slots):
        if owner is None:
            continue
        if owner not in by_id:
            raise InfeasibleSchedule(f"slot {t} owned by unknown job {owner!r}")
        owned[owner].append(t)
    completions: dict[str, int] = {}
    for j in inst.jobs:
        slots = owned[j.id]
        if len(slots) != j.p:
            raise InfeasibleSchedule(
                f"job {j.id!r} owns {len(slots)} slots, needs {j.p}"
            )
        if slots[0] < j.r:
            raise InfeasibleSchedule(f"job {j.id!r} runs at {slots[0]} before r={j.r}")
        completions[j.id] = slots[-1] + 1
    return completions


def evaluate_schedule(inst: WftInstance, schedule: Schedule, lp_exponent: int = 1) -> int:
    """Sum of (w_j * flow_j) ** lp_exponent over all jobs.

    The lp root is applied only in reporting, never here; all arithmetic is
    exact integers.
    """
    completions = completion_times(inst, schedule)
    total = 0
    for j in inst.jobs:
        total += (j.w * (completions[j.id] - j.r)) ** lp_exponent
    return total


def busy_pieces(inst: WftInstance) -> list[tuple[int, WftInstance]]:
    """Split into independent busy pieces, returning (offset, shifted piece).

    A split happens where all released work completes strictly before the
    next release; each piece's releases are shifted so its busy schedule
    fills [0, T').
    """
    pieces: list[tuple[int, WftInstance]] = []
    current: list[Job] = []
    offset = inst.jobs[0].r
    busy_end = offset
    for job in inst.jobs:
        if current and job.r > busy_end:
            pieces.append((offset, validate_instance(current)))
            current = []
            offset = job.r
            busy_end = job.r
        current.append(Job(job.id, job.p, job.w, job.r - offset))
        busy_end += job.p
    pieces.append((offset, validate_instance(current)))
    return pieces


def busy_decompose(inst: WftInstance) -> list[WftInstance]:
    """Independent subinstances whose optima concatenate to the whole optimum."""
    return [piece for _, piece in busy_pieces(inst)]


def next_power_of_two(x: int) -> int:
    return 1 << (x - 1).bit_length() if x > 1 else 1


def pad_job_id(inst: WftInstance) -> str:
    existing = {j.id for j in inst.jobs}
    candidate = "__pad__"
    k = 1
    while candidate in existing:
        k += 1
        candidate = f"__pad__{k}"
    return candidate


def pad_to_power_of_two(inst: WftInstance) -> WftInstance:
    """Append one zero-weight job released at T so the horizon is a power of 2."""
    target = next_power_of_two(inst.T)
    if target == inst.T:
        return inst
    pad = Job(id=pad_job_id(inst), p=target - inst.T, w=0, r=inst.T)
    return validate_instance(list(inst.jobs) + [pad])


def srpt_schedule(inst: WftInstance) -> Schedule:
    """Shortest Remaining Processing Time; ties broken by job id."""
    remaining = {j.id: j.p for j in inst.jobs}
    release = {j.id: j.r for j in inst.jobs}
    slots: list[str | None] = []
    t = 0
    while any(remaining.values()):
        ready = [jid for jid, rem in remaining.items() if rem > 0 and release[jid] <= t]
        if not ready:
            slots.append(None)
            t += 1
            continue
        pick = min(ready, key=lambda jid: (remaining[jid], jid))
        slots.append(pick)
        remaining[pick] -= 1
        t += 1
    return Schedule(slots=tuple(slots))


# --- file formats ---


def instance_to_json(inst: WftInstance) -> str:
    payload = {
        "format": FORMAT_TAG,
        "jobs": [{"id": j.id, "p": j.p, "w": j.w, "r": j.r} for j in inst.jobs],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def instance_from_json(text: str) -> WftInstance:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("format") != FORMAT_TAG:
        raise ParseError(f"expected format {FORMAT_TAG!r}")
    raw_jobs = payload.get("jobs")
    if not isinstance(raw_jobs, list):
        raise ParseError("missing 'jobs' array")
    jobs = []
    for entry in raw_jobs:
        try:
            jobs.append(Job(str(entry["id"]), entry["p"], entry["w"], entry["r"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad job entry {entry!r}") from exc
    return validate_instance(jobs)


def schedule_to_json(schedule: Schedule) -> str:
    payload = {"format": FORMAT_TAG, "slots": list(schedule.slots)}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def schedule_from_json(text: str) -> Schedule:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("format") != FORMAT_TAG:
        raise ParseError(f"expected format {FORMAT_TAG!r}")
    slots = payload.get("slots")
    if not isinstance(slots, list):
        raise ParseError("missing 'slots' array")
    return Schedule(slots=tuple(None if s is None else str(s) for s in slots))
