"""Network-coding simulator where packets are single field elements.

A source encodes its message as a flat of one conjugacy class and is treated
as a relay preloaded with a P-basis of that flat.  Every node forwards, per
outgoing edge, one element drawn uniformly from the closure of the packets it
holds: unwarp the packets to vectors, draw a uniform nonzero linear
combination over the base field, warp the result back into the class.  Sinks
decode by taking the matroid closure of everything they received; success is
exact flat recovery, partial recovery is reported through the flat metric.

Links are error-free and carry one packet per trial; relays keep no state
across trials.  A classical random-linear-network-coding simulator over
coordinate vectors acts as an independent oracle: it canonicalizes each
received vector to the minimum-discrete-log representative of its line (the
same representative unwarping picks) and draws combinations from the same
seeded stream, so under a shared seed its decoded row space corresponds to
the decoded flat through the warping correspondence, packet for packet.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Sequence

from .conjugacy import class_of, unwarp, warp
from .errors import (
    EmptyInput,
    MixedClasses,
    RankOutOfRange,
    SpecInvalid,
    ZeroArgument,
)
from .field import Fe, FieldCtx, ZERO, field_from_spec, mat_rank
from .matroid import Flat, Subspace, class_flat, dist, matroid_closure, subspace_dist
from .minimal import p_basis

Edge = tuple[str, str]

_ROLES = frozenset({"source", "relay", "sink"})
_SPEC_KEYS = frozenset({"field", "nodes", "edges", "class", "rank", "trials", "seed"})


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise SpecInvalid(message)


@dataclass(frozen=True)
class NetSpec:
    """A DAG network plus generation parameters, loadable from JSON."""

    field: str
    nodes: tuple[tuple[str, str], ...]  # (id, role), insertion order significant
    edges: tuple[Edge, ...]
    class_index: int | None
    rank: int
    trials: int
    seed: int | str

    @classmethod
    def from_json(cls, text: str) -> "NetSpec":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecInvalid(f"not valid JSON: {exc}") from None
        _require(isinstance(doc, dict), "top level must be a JSON object")
        missing = _SPEC_KEYS - doc.keys()
        _require(not missing, f"missing keys: {', '.join(sorted(missing))}")
        extra = doc.keys() - _SPEC_KEYS
        _require(not extra, f"unknown keys: {', '.join(sorted(extra))}")
        _require(isinstance(doc["field"], str), '"field" must be a string')
        _require(isinstance(doc["nodes"], list), '"nodes" must be a list')
        nodes = []
        for item in doc["nodes"]:
            ok = (
                isinstance(item, dict)
                and item.keys() == {"id", "role"}
                and isinstance(item["id"], str)
                and isinstance(item["role"], str)
            )
            _require(ok, 'each node must be {"id": str, "role": str}')
            nodes.append((item["id"], item["role"]))
        _require(isinstance(doc["edges"], list), '"edges" must be a list')
        edges = []
        for item in doc["edges"]:
            ok = (
                isinstance(item, list)
                and len(item) == 2
                and all(isinstance(x, str) for x in item)
            )
            _require(ok, "each edge must be a [from, to] pair of node ids")
            edges.append((item[0], item[1]))
        cls_idx = doc["class"]
        _require(
            cls_idx is None or (isinstance(cls_idx, int) and not isinstance(cls_idx, bool)),
            '"class" must be an integer or null',
        )
        for key in ("rank", "trials"):
            _require(
                isinstance(doc[key], int) and not isinstance(doc[key], bool),
                f'"{key}" must be an integer',
            )
        _require(
            (isinstance(doc["seed"], int) and not isinstance(doc["seed"], bool))
            or isinstance(doc["seed"], str),
            '"seed" must be an integer or a string',
        )
        return cls(
            field=doc["field"],
            nodes=tuple(nodes),
            edges=tuple(edges),
            class_index=cls_idx,
            rank=doc["rank"],
            trials=doc["trials"],
            seed=doc["seed"],
        )

    def to_json(self) -> str:
        doc = {
            "field": self.field,
            "nodes": [{"id": nid, "role": role} for nid, role in self.nodes],
            "edges": [list(e) for e in self.edges],
            "class": self.class_index,
            "rank": self.rank,
            "trials": self.trials,
            "seed": self.seed,
        }
        return json.dumps(doc, indent=2)

    def ctx(self) -> FieldCtx:
        return field_from_spec(self.field)

    def roles(self) -> dict[str, str]:
        return dict(self.nodes)

    def source_id(self) -> str:
        for nid, role in self.nodes:
            if role == "source":
                return nid
        raise SpecInvalid("no source node")

    def sink_ids(self) -> tuple[str, ...]:
        return tuple(nid for nid, role in self.nodes if role == "sink")

    def out_edge_indices(self) -> dict[str, list[int]]:
        out: dict[str, list[int]] = {nid: [] for nid, _ in self.nodes}
        for i, (u, _) in enumerate(self.edges):
            out[u].append(i)
        return out

    def topo_order(self) -> tuple[str, ...]:
        """Kahn's algorithm; ties broken by node insertion order."""
        indeg = {nid: 0 for nid, _ in self.nodes}
        for _, v in self.edges:
            indeg[v] += 1
        order = []
        ready = [nid for nid, _ in self.nodes if indeg[nid] == 0]
        while ready:
            nid = ready.pop(0)
            order.append(nid)
            for u, v in self.edges:
                if u == nid:
                    indeg[v] -= 1
                    if indeg[v] == 0:
                        ready.append(v)
        _require(len(order) == len(self.nodes), "edges contain a cycle")
        return tuple(order)

    def validate(self, ctx: FieldCtx | None = None) -> None:
        ids = [nid for nid, _ in self.nodes]
        _require(len(set(ids)) == len(ids), "duplicate node id")
        for nid, role in self.nodes:
            _require(role in _ROLES, f"unknown role {role!r} for node {nid!r}")
        known = set(ids)
        for u, v in self.edges:
            _require(u in known and v in known, f"edge [{u!r}, {v!r}] references an unknown node")
            _require(u != v, f"self-loop on {u!r}")
        sources = [nid for nid, role in self.nodes if role == "source"]
        _require(len(sources) == 1, f"exactly one source required, found {len(sources)}")
        _require(
            all(v != sources[0] for _, v in self.edges),
            "the source cannot have incoming edges",
        )
        _require(self.trials >= 0, "trials must be nonnegative")
        order = self.topo_order()
        reachable = {sources[0]}
        for nid in order:
            if nid in reachable:
                for u, v in self.edges:
                    if u == nid:
                        reachable.add(v)
        for nid, role in self.nodes:
            if role == "sink":
                _require(nid in reachable, f"sink {nid!r} is unreachable from the source")
        if ctx is not None:
            if self.class_index is not None:
                _require(
                    0 <= self.class_index <= ctx.q - 2,
                    f"class index {self.class_index} outside 0..{ctx.q - 2}",
                )
                if not 0 <= self.rank <= ctx.m:
                    raise RankOutOfRange(f"rank {self.rank} outside 0..{ctx.m}")
            elif self.rank > 1:
                raise RankOutOfRange("a zero-class message has rank at most 1")
            elif self.rank < 0:
                raise RankOutOfRange(f"rank {self.rank} is negative")


def _draw_nonzero_combination(
    ctx: FieldCtx, vectors: Sequence[Sequence[Fe]], rng: random.Random
) -> list[Fe]:
    """Uniform nonzero element of the span: draw one base-field coefficient
    per vector, reject when the combination vanishes.  Exactly one randrange
    call per vector per attempt, so an identically seeded stream replays."""
    q = ctx.q
    while True:
        out = [ZERO] * ctx.m
        for vec in vectors:
            c = ctx.subfield_elements[rng.randrange(q)]
            if c == ZERO:
                continue
            for j, x in enumerate(vec):
                if x != ZERO:
                    out[j] = ctx.add(out[j], ctx.mul(c, x))
        if any(x != ZERO for x in out):
            return out


def relay_forward(ctx: FieldCtx, in_packets: Sequence[Fe], rng: random.Random) -> Fe:
    """One outgoing packet: uniform over the closure of the received ones.

    All-zero input forwards zero (the closure of {0}); otherwise the packets
    must share a class and the draw goes through their unwarped lifts.
    """
    pkts = list(in_packets)
    if not pkts:
        raise EmptyInput("a relay needs at least one incoming packet")
    classes = {class_of(ctx, p) for p in pkts}
    if len(classes) > 1:
        names = ", ".join(sorted("0" if c is None else f"C(g^{c})" for c in classes))
        raise MixedClasses(f"packets span several classes: {names}")
    ell = classes.pop()
    if ell is None:
        return ZERO
    lifts = [ctx.coords(unwarp(ctx, p, ell)) for p in pkts]
    combo = _draw_nonzero_combination(ctx, lifts, rng)
    return ctx.mul(ell, warp(ctx, ctx.uncoords(combo)))


def encode_message(ctx: FieldCtx, ell: int, r: int, rng: random.Random) -> Flat:
    """Uniformly random rank-r flat of class ell: draw r independent vectors
    over the base field and push the subspace through the class map."""
    if not 1 <= r <= ctx.m:
        raise RankOutOfRange(f"rank {r} outside 1..{ctx.m}")
    rows: list[list[Fe]] = []
    while len(rows) < r:
        vec = [ctx.subfield_elements[rng.randrange(ctx.q)] for _ in range(ctx.m)]
        if all(x == ZERO for x in vec):
            continue
        if mat_rank(ctx, rows + [vec]) == len(rows) + 1:
            rows.append(vec)
    return class_flat(ctx, Subspace.from_vectors(ctx, rows), ell % (ctx.q - 1))


@dataclass(frozen=True)
class SinkResult:
    sink: str
    received: tuple[Fe, ...]  # arrival order, duplicates kept
    decoded: tuple[Fe, ...]  # decoded flat, canonical order
    success: bool
    distance: int


@dataclass(frozen=True)
class TrialReport:
    message: tuple[Fe, ...]
    sinks: tuple[SinkResult, ...]
    success: bool  # every sink recovered the flat exactly
    packets_forwarded: int
    edge_packets: tuple[tuple[str, str, Fe], ...]


def run_trial(
    ctx: FieldCtx, spec: NetSpec, message: Flat, seed: int | str
) -> TrialReport:
    """One generation: walk the DAG in topological order, one packet per
    outgoing edge, each checked against the message closure on the spot."""
    rng = random.Random(seed)
    roles = spec.roles()
    out_edges = spec.out_edge_indices()
    allowed = set(message.points)
    preload = list(p_basis(ctx, message.points))
    held: dict[str, list[Fe]] = {nid: [] for nid, _ in spec.nodes}
    edge_log: list[tuple[str, str, Fe]] = []
    for nid in spec.topo_order():
        pool = preload if roles[nid] == "source" else held[nid]
        if not pool:
            continue
        for ei in out_edges[nid]:
            u, v = spec.edges[ei]
            value = relay_forward(ctx, pool, rng)
            if value not in allowed:
                raise AssertionError(
                    f"containment violated: {ctx.format_element(value)} "
                    f"forwarded on [{u}, {v}] lies outside the message closure"
                )
            held[v].append(value)
            edge_log.append((u, v, value))
    sinks = []
    for nid in spec.sink_ids():
        got = tuple(held[nid])
        decoded = matroid_closure(ctx, got)
        sinks.append(
            SinkResult(
                sink=nid,
                received=got,
                decoded=decoded.points,
                success=decoded.points == message.points,
                distance=dist(message, decoded),
            )
        )
    return TrialReport(
        message=message.points,
        sinks=tuple(sinks),
        success=all(s.success for s in sinks),
        packets_forwarded=len(edge_log),
        edge_packets=tuple(edge_log),
    )


def canonical_line_rep(ctx: FieldCtx, vector: Sequence[Fe]) -> tuple[Fe, ...]:
    """The scalar multiple whose field element has the least discrete log —
    the same representative unwarping chooses, which is what lets the vector
    simulator mirror the element simulator."""
    a = ctx.uncoords(list(vector))
    if a == ZERO:
        raise ZeroArgument("the zero vector spans no line")
    best = min(ctx.mul(c, a) for c in ctx.subfield_elements[1:])
    return tuple(ctx.coords(best))


@dataclass(frozen=True)
class OracleSinkResult:
    sink: str
    received: tuple[tuple[Fe, ...], ...]
    decoded: Subspace
    success: bool
    distance: int


@dataclass(frozen=True)
class OracleTrialReport:
    message: Subspace
    sinks: tuple[OracleSinkResult, ...]
    success: bool
    packets_forwarded: int
    edge_packets: tuple[tuple[str, str, tuple[Fe, ...]], ...]


def rlnc_oracle_trial(
    ctx: FieldCtx,
    spec: NetSpec,
    source_vectors: Sequence[Sequence[Fe]],
    seed: int | str,
) -> OracleTrialReport:
    """Classical vector network coding on the same DAG: relays forward random
    nonzero combinations, sinks decode the row space.  Vectors are
    canonicalized per line at receipt, so a shared seed replays the element
    simulator's draws one for one."""
    rng = random.Random(seed)
    roles = spec.roles()
    out_edges = spec.out_edge_indices()
    message = Subspace.from_vectors(ctx, source_vectors)
    preload = [canonical_line_rep(ctx, v) for v in source_vectors]
    held: dict[str, list[tuple[Fe, ...]]] = {nid: [] for nid, _ in spec.nodes}
    edge_log: list[tuple[str, str, tuple[Fe, ...]]] = []
    for nid in spec.topo_order():
        if roles[nid] == "source":
            pool = preload
        else:
            pool = [canonical_line_rep(ctx, v) for v in held[nid]]
        if not pool:
            continue
        for ei in out_edges[nid]:
            u, v = spec.edges[ei]
            combo = tuple(_draw_nonzero_combination(ctx, pool, rng))
            held[v].append(combo)
            edge_log.append((u, v, combo))
    sinks = []
    for nid in spec.sink_ids():
        got = tuple(held[nid])
        decoded = Subspace.from_vectors(ctx, got)
        sinks.append(
            OracleSinkResult(
                sink=nid,
                received=got,
                decoded=decoded,
                success=decoded == message,
                distance=subspace_dist(decoded, message),
            )
        )
    return OracleTrialReport(
        message=message,
        sinks=tuple(sinks),
        success=all(s.success for s in sinks),
        packets_forwarded=len(edge_log),
        edge_packets=tuple(edge_log),
    )


def mirrored_source_vectors(ctx: FieldCtx, message: Flat) -> list[tuple[Fe, ...]]:
    """Lifts of the P-basis the element simulator preloads — the oracle's
    source must start from exactly these vectors for the runs to mirror."""
    if not message.points:
        return []
    ell = class_of(ctx, message.points[0])
    if ell is None:
        raise SpecInvalid("the zero-class message has no vector counterpart")
    return [
        tuple(ctx.coords(unwarp(ctx, b, ell)))
        for b in p_basis(ctx, message.points)
    ]


def build_message(ctx: FieldCtx, spec: NetSpec, rng: random.Random) -> Flat:
    """Per-trial message: empty flat at rank 0, the zero flat for the zero
    class, otherwise a random flat of the requested class and rank."""
    if spec.rank == 0:
        return matroid_closure(ctx, ())
    if spec.class_index is None:
        return matroid_closure(ctx, (ZERO,))
    return encode_message(ctx, spec.class_index, spec.rank, rng)


def simulate(
    spec: NetSpec,
    *,
    trials: int | None = None,
    seed: int | str | None = None,
    oracle: str | None = None,
) -> dict:
    """Run the configured number of trials with per-trial seeds derived from
    the master seed; returns a JSON-ready report with fixed key order.  With
    oracle="rlnc" every trial is replayed on the vector simulator under the
    same seed and the decoded flats are compared through the class map."""
    ctx = spec.ctx()
    spec.validate(ctx)
    n_trials = spec.trials if trials is None else trials
    _require(n_trials >= 0, "trials must be nonnegative")
    master = spec.seed if seed is None else seed
    if oracle not in (None, "rlnc"):
        raise SpecInvalid(f"unknown oracle {oracle!r}; supported: rlnc")
    if oracle is not None and spec.class_index is None:
        raise SpecInvalid("the rlnc oracle mirrors nonzero-class messages only")
    sink_ids = spec.sink_ids()
    successes = 0
    packets = 0
    dist_total = 0
    dist_count = 0
    per_sink = {nid: {"successes": 0, "dist": 0} for nid in sink_ids}
    oracle_successes = 0
    oracle_matches = True
    for i in range(n_trials):
        message = build_message(ctx, spec, random.Random(f"{master}:msg:{i}"))
        trial_seed = f"{master}:trial:{i}"
        report = run_trial(ctx, spec, message, trial_seed)
        successes += report.success
        packets += report.packets_forwarded
        for s in report.sinks:
            per_sink[s.sink]["successes"] += s.success
            per_sink[s.sink]["dist"] += s.distance
            dist_total += s.distance
            dist_count += 1
        if oracle is not None:
            vecs = mirrored_source_vectors(ctx, message)
            oreport = rlnc_oracle_trial(ctx, spec, vecs, trial_seed)
            oracle_successes += oreport.success
            ell = spec.class_index % (ctx.q - 1)
            for s, os in zip(report.sinks, oreport.sinks):
                if class_flat(ctx, os.decoded, ell).points != s.decoded:
                    oracle_matches = False
    out = {
        "success_rate": successes / n_trials if n_trials else None,
        "mean_distance": dist_total / dist_count if dist_count else None,
        "per_sink": [
            {
                "id": nid,
                "success_rate": per_sink[nid]["successes"] / n_trials if n_trials else None,
                "mean_distance": per_sink[nid]["dist"] / n_trials if n_trials else None,
            }
            for nid in sink_ids
        ],
        "trials": n_trials,
        "seed": master,
        "packets_forwarded": packets,
        "oracle": None,
    }
    if oracle is not None:
        out["oracle"] = {
            "protocol": "rlnc",
            "success_rate": oracle_successes / n_trials if n_trials else None,
            "per_trial_match": oracle_matches,
        }
    return out
