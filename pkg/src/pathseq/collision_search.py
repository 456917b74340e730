"""Group graphs by path sequence and report sequences shared by distinct graphs."""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from pathseq.graph_core import (ISO_MAX_N, Graph, ParseError, UnsupportedSizeError,
                                are_isomorphic_small, is_connected, parse_graph6, write_graph6)
from pathseq.path_oracle import DP_MAX_N, path_sequence

log = logging.getLogger(__name__)

ENUMERATE_MAX_N = 7


class ReportWriteError(OSError):
    """Writing the report failed after ``written`` complete lines."""

    def __init__(self, message: str, written: int):
        super().__init__(message)
        self.written = written


@dataclass
class CollisionRecord:
    sequence: tuple[int, ...]
    members: list[str]
    iso_classes: list[list[int]] | None
    connected_flags: list[bool]

    @property
    def iso_skipped(self) -> bool:
        return self.iso_classes is None

    def class_index(self) -> list[int | None]:
        """Isomorphism class number of each member (None if partitioning was skipped)."""
        out: list[int | None] = [None] * len(self.members)
        for c, cell in enumerate(self.iso_classes or []):
            for i in cell:
                out[i] = c
        return out


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, in increasing edge-mask order.

    Bit ``k`` of the mask is the ``k``-th vertex pair in graph6 order
    ``(0,1), (0,2), (1,2), (0,3), ...``.
    """
    if not 1 <= n <= ENUMERATE_MAX_N:
        raise UnsupportedSizeError(f"labeled enumeration supports 1 <= n <= {ENUMERATE_MAX_N}, got {n}")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Graph(n, tuple(rows))


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one graph6 record per line; blank lines and ``#`` comments are skipped."""
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            yield parse_graph6(text)
        except ParseError as exc:
            raise ParseError(f"{exc} in graph6 record", line=lineno) from exc


def sequence_key(seq: tuple[int, ...]) -> str:
    """Length-prefixed decimal rendering used as the grouping key."""
    return f"{len(seq)}:" + ",".join(map(str, seq))


def _keyed(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    if g.n > DP_MAX_N:
        return None
    seq = path_sequence(g)
    return sequence_key(seq), seq


def _partition(graphs: list[Graph]) -> list[list[int]]:
    cells: list[list[int]] = []
    for i, g in enumerate(graphs):
        for cell in cells:
            if are_isomorphic_small(graphs[cell[0]], g):
                cell.append(i)
                break
        else:
            cells.append([i])
    return cells


def find_collisions(source: Iterable[Graph], *, connected_only: bool = False,
                    dedupe_isomorphic: bool = True, jobs: int = 1) -> list[CollisionRecord]:
    """Group ``source`` by exact path sequence and return the shared groups.

    With ``dedupe_isomorphic`` each isomorphism class keeps its first member
    only, and a group is reported when at least two classes remain.  Without
    it, every group of two or more members is reported.  Graphs beyond the
    DP limit are skipped with a log message; groups with n > 10 are reported
    without an isomorphism partition.
    """
    graphs = (g for g in source if not connected_only or is_connected(g))
    groups: dict[str, tuple[tuple[int, ...], list[Graph]]] = {}

    def add(g: Graph, keyed: tuple[str, tuple[int, ...]] | None) -> None:
        if keyed is None:
            log.warning("skipping %d-vertex graph: beyond the DP limit n <= %d", g.n, DP_MAX_N)
            return
        key, seq = keyed
        groups.setdefault(key, (seq, []))[1].append(g)

    if jobs > 1:
        batch = list(graphs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for g, keyed in zip(batch, pool.map(_keyed, batch, chunksize=256)):
                add(g, keyed)
    else:
        for g in graphs:
            add(g, _keyed(g))

    records = []
    for seq, members in groups.values():
        if len(members) < 2:
            continue
        n = members[0].n
        cells = _partition(members) if n <= ISO_MAX_N else None
        if dedupe_isomorphic and cells is not None:
            members = [members[cell[0]] for cell in cells]
            cells = [[i] for i in range(len(members))]
            if len(members) < 2:
                continue
        records.append(CollisionRecord(
            sequence=seq,
            members=[write_graph6(g) for g in members],
            iso_classes=cells,
            connected_flags=[is_connected(g) for g in members],
        ))
    records.sort(key=lambda r: r.sequence)
    return records


def record_line(record: CollisionRecord) -> str:
    payload = {
        "sequence": ",".join(map(str, record.sequence)),
        "members": record.members,
        "iso_class": record.class_index(),
        "connected": record.connected_flags,
    }
    if record.iso_skipped:
        payload["iso_skipped"] = True
    return json.dumps(payload, separators=(",", ":"))


def write_collision_report(records: Iterable[CollisionRecord], sink: IO[str]) -> None:
    """Write one JSON object per line, in the order given."""
    written = 0
    try:
        for record in records:
            sink.write(record_line(record) + "\n")
            written += 1
        sink.flush()
    except OSError as exc:
        try:
            sink.write(f"# partial output: {written} records written before error\n")
        except OSError:
            pass
        raise ReportWriteError(f"report write failed after {written} records: {exc}", written) from exc
