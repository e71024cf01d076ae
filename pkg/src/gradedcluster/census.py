"""Breadth-first enumeration of mutation and degree-quiver classes.

States are deduplicated up to essential equivalence: a cheap invariant
fingerprint buckets candidates, and only same-bucket pairs go through an
exact isomorphism test.  The walk order is deterministic (FIFO, directions
ascending), so interruption plus resume reproduces the one-shot run.

Checkpoints are newline-delimited JSON: one meta line, one line per
discovered class {key, parent_key, direction}, and periodic progress lines
recording how many classes have been fully expanded.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from typing import Optional

from .core import GradedSeed, mutate_grading_rows, mutate_rows, seed_from_json, seed_to_json
from .equivalence import (_neg_rows, canonical_key_raw, class_fingerprint,
                          iso_exists_raw, state_sigs)


class CheckpointFormatError(ValueError):
    pass


@dataclass(frozen=True)
class CensusLimits:
    max_classes: Optional[int] = None
    max_entry: Optional[int] = None
    wall_clock: Optional[float] = None  # seconds


@dataclass
class CensusReport:
    mode: str
    class_count: int
    occurring_degrees: frozenset
    frontier_exhausted: bool
    budget_hit: bool
    entry_cap_hit: bool
    elapsed: float

    def summary(self) -> str:
        degs = sorted(self.occurring_degrees)
        status = "exact" if self.frontier_exhausted else "lower bound"
        return "%s classes: %d (%s); degrees: %s" % (
            self.mode, self.class_count, status,
            "{" + ", ".join(map(str, degs)) + "}")


class _Walk:
    """BFS state shared by fresh runs and resumed runs."""

    def __init__(self, seed: GradedSeed, mode: str, symmetry: str = "essential"):
        if mode not in ("matrix", "degree"):
            raise ValueError("mode must be 'matrix' or 'degree'")
        if symmetry not in ("essential", "isomorphism"):
            raise ValueError("symmetry must be 'essential' or 'isomorphism'")
        self.seed = seed
        self.mode = mode
        self.symmetry = symmetry
        self.n = seed.n
        self.m = seed.m
        self.r = seed.grading.r
        self.states = []     # index -> (rows, grows)
        self.sigs = []       # index -> (sigs(rows), sigs(-rows)) with degrees
        self.parents = []    # index -> (parent index or -1, direction or 0)
        self.buckets = {}    # fingerprint -> [index]
        self.degrees = set()
        self.expanded = 0
        self._add_state(seed.matrix.rows, seed.grading.rows, -1, 0)

    def _degcols(self, rows, grows):
        if self.mode != "degree":
            return None
        return tuple(tuple(grow[j] for grow in grows) for j in range(self.n + self.m))

    def _collect(self, grows):
        for j in range(self.n):
            self.degrees.add(tuple(grow[j] for grow in grows))

    def _add_state(self, rows, grows, parent, direction) -> bool:
        """Register a state if its class is new; returns True when new."""
        n, m = self.n, self.m
        degcols = self._degcols(rows, grows)
        fp = class_fingerprint(rows, n, m, degcols)
        bucket = self.buckets.setdefault(fp, [])
        my_sigs = state_sigs(rows, n, m, degcols)
        quotient_sign = self.symmetry == "essential"
        for idx in bucket:
            orows, ogrows = self.states[idx]
            odeg = self._degcols(orows, ogrows)
            if iso_exists_raw(rows, orows, n, m, degcols, odeg,
                              sigsA=my_sigs, sigsB_pair=self.sigs[idx],
                              quotient_sign=quotient_sign):
                return False
        bucket.append(len(self.states))
        self.states.append((rows, grows))
        self.sigs.append((my_sigs, state_sigs(_neg_rows(rows), n, m, degcols)))
        self.parents.append((parent, direction))
        if self.mode == "degree":
            self._collect(grows)
        return True


def _state_key(walk: _Walk, idx: int) -> str:
    rows, grows = walk.states[idx]
    degcols = walk._degcols(rows, grows)
    return canonical_key_raw(rows, walk.n, walk.m, degcols).hex()


class _CheckpointWriter:
    FLUSH_EVERY = 64

    def __init__(self, path, walk: _Walk, limits: CensusLimits, fresh: bool):
        self.path = path
        self.walk = walk
        self.keys = {}
        self._pending = 0
        if fresh:
            self.fh = open(path, "w")
            meta = {"type": "meta", "mode": walk.mode,
                    "symmetry": walk.symmetry,
                    "seed": seed_to_json(walk.seed),
                    "limits": {"max_classes": limits.max_classes,
                               "max_entry": limits.max_entry}}
            self.fh.write(json.dumps(meta) + "\n")
            self.node(0)
            self.flush()
        else:
            self.fh = open(path, "a")

    def key_of(self, idx: int) -> str:
        if idx not in self.keys:
            self.keys[idx] = _state_key(self.walk, idx)
        return self.keys[idx]

    def node(self, idx: int):
        parent, direction = self.walk.parents[idx]
        line = {"type": "node", "key": self.key_of(idx),
                "parent_key": self.key_of(parent) if parent >= 0 else None,
                "direction": direction}
        self.fh.write(json.dumps(line) + "\n")
        self._maybe_flush()

    def progress(self, expanded: int):
        self.fh.write(json.dumps({"type": "progress", "expanded": expanded}) + "\n")
        self.flush()

    def _maybe_flush(self):
        self._pending += 1
        if self._pending >= self.FLUSH_EVERY:
            self.flush()

    def flush(self):
        self._pending = 0
        self.fh.flush()
        os.fsync(self.fh.fileno())

    def close(self):
        self.flush()
        self.fh.close()


def _run(walk: _Walk, limits: CensusLimits, writer: Optional[_CheckpointWriter],
         started: float) -> CensusReport:
    n = walk.n
    budget_hit = False
    entry_cap_hit = False
    clock_checked = 0
    try:
        while walk.expanded < len(walk.states):
            if limits.max_classes is not None and len(walk.states) > limits.max_classes:
                budget_hit = True
                break
            if limits.wall_clock is not None:
                clock_checked += 1
                if clock_checked % 16 == 0 and time.monotonic() - started > limits.wall_clock:
                    budget_hit = True
                    break
            idx = walk.expanded
            rows, grows = walk.states[idx]
            for k0 in range(n):
                rows2 = mutate_rows(rows, n, k0)
                if limits.max_entry is not None:
                    if any(abs(x) > limits.max_entry for row in rows2 for x in row):
                        entry_cap_hit = True
                        continue
                grows2 = mutate_grading_rows(grows, rows, k0) if walk.r else grows
                if walk._add_state(rows2, grows2, idx, k0 + 1) and writer:
                    writer.node(len(walk.states) - 1)
            walk.expanded += 1
            if writer and walk.expanded % _CheckpointWriter.FLUSH_EVERY == 0:
                writer.progress(walk.expanded)
    finally:
        if writer:
            writer.progress(walk.expanded)
            writer.close()

    if walk.mode == "degree":
        degs = walk.degrees
        occurring = frozenset(d[0] for d in degs) if walk.r == 1 else frozenset(degs)
    else:
        occurring = frozenset()
    return CensusReport(
        mode=walk.mode,
        class_count=len(walk.states),
        occurring_degrees=occurring,
        frontier_exhausted=walk.expanded == len(walk.states) and not entry_cap_hit,
        budget_hit=budget_hit,
        entry_cap_hit=entry_cap_hit,
        elapsed=time.monotonic() - started)


def enumerate_census(seed: GradedSeed, mode: str = "degree",
                     limits: Optional[CensusLimits] = None,
                     checkpoint: Optional[str] = None,
                     symmetry: str = "essential") -> CensusReport:
    """Count (degree) quiver classes reachable from the seed.

    symmetry="essential" quotients simultaneous permutation and global
    matrix sign; "isomorphism" quotients permutation only.
    """
    limits = limits or CensusLimits()
    started = time.monotonic()
    walk = _Walk(seed, mode, symmetry)
    writer = _CheckpointWriter(checkpoint, walk, limits, fresh=True) if checkpoint else None
    return _run(walk, limits, writer, started)


def resume(checkpoint: str, limits: Optional[CensusLimits] = None) -> CensusReport:
    """Continue an interrupted run; a finished checkpoint just re-reports.

    States are rebuilt by replaying each recorded (parent, direction) edge
    from the seed, so the log alone suffices.
    """
    started = time.monotonic()
    meta = None
    nodes = []
    expanded = 0
    try:
        with open(checkpoint) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    data = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise CheckpointFormatError(
                        "%s:%d: bad JSON: %s" % (checkpoint, lineno, exc)) from exc
                kind = data.get("type")
                if kind == "meta":
                    meta = data
                elif kind == "node":
                    nodes.append(data)
                elif kind == "progress":
                    expanded = max(expanded, int(data["expanded"]))
                else:
                    raise CheckpointFormatError(
                        "%s:%d: unknown line type %r" % (checkpoint, lineno, kind))
    except FileNotFoundError:
        raise CheckpointFormatError("checkpoint %s does not exist" % checkpoint)
    if meta is None:
        raise CheckpointFormatError("checkpoint %s has no meta line" % checkpoint)

    seed = seed_from_json(meta["seed"])
    mode = meta["mode"]
    symmetry = meta.get("symmetry", "essential")
    if limits is None:
        lm = meta.get("limits") or {}
        limits = CensusLimits(max_classes=lm.get("max_classes"),
                              max_entry=lm.get("max_entry"))
    walk = _Walk(seed, mode, symmetry)

    by_key = {}
    if nodes:
        if nodes[0]["parent_key"] is not None:
            raise CheckpointFormatError("first node must be the root")
        by_key[nodes[0]["key"]] = 0
    for data in nodes[1:]:
        pkey = data["parent_key"]
        if pkey not in by_key:
            raise CheckpointFormatError("unknown parent key %r" % pkey)
        pidx = by_key[pkey]
        rows, grows = walk.states[pidx]
        k0 = int(data["direction"]) - 1
        if not 0 <= k0 < walk.n:
            raise CheckpointFormatError("direction out of range in checkpoint")
        rows2 = mutate_rows(rows, walk.n, k0)
        grows2 = mutate_grading_rows(grows, rows, k0) if walk.r else grows
        if not walk._add_state(rows2, grows2, pidx, k0 + 1):
            raise CheckpointFormatError("checkpoint records a duplicate class")
        by_key[data["key"]] = len(walk.states) - 1
    walk.expanded = min(expanded, len(walk.states))

    writer = _CheckpointWriter(checkpoint, walk, limits, fresh=False)
    writer.keys = {idx: key for key, idx in by_key.items()}
    return _run(walk, limits, writer, started)
