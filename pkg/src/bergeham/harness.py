"""Randomized campaigns: theorem verification, sharpness sweeps, conjecture hunts.

Every campaign is reproducible from a single master seed.  Trial i draws its
own RNG seed from sha256("master:i"), so reports are byte-identical across
runs and machines, and trials can be distributed over worker processes
without changing the outcome.

A trial that contradicts a proven statement is serialized as a standalone
refutation document; ``reverify_refutation`` re-runs everything from that
text alone, so a report reader never has to trust in-memory state.
"""

from __future__ import annotations

import hashlib
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations

from .conditions import (
    ConditionReport,
    conjecture_r_uniform,
    posa_nonuniform,
    posa_r_uniform,
)
from .constructions import designated_violation_tag, generate
from .core import DegreeSequence, DomainError, Hypergraph, PreconditionError
from .formats import read_bhg, write_bhg
from .solver import SearchBudget, find_hamiltonian_berge_cycle

OUTCOMES = ("pass", "fail", "unknown", "skip")


@dataclass(frozen=True)
class SampleProfile:
    """How instances are drawn.

    Each universe edge is kept independently with ``edge_probability``,
    except edges touching the first ``starved`` vertices, which are kept with
    ``starved_probability`` (that skew is what makes near-boundary degree
    sequences likely).  With ``dense_floor`` set, edges at minimum-degree
    vertices are then added wholesale until the matching degree condition
    holds, so every sample satisfies the theorem hypothesis.
    """

    edge_probability: float = 0.5
    dense_floor: str | None = None  # None | "r-uniform" | "non-uniform"
    starved: int = 0
    starved_probability: float = 0.05

    def __post_init__(self):
        for name, p in (
            ("edge_probability", self.edge_probability),
            ("starved_probability", self.starved_probability),
        ):
            if not 0.0 <= p <= 1.0:
                raise DomainError(f"{name} must be in [0, 1], got {p}")
        if self.dense_floor not in (None, "r-uniform", "non-uniform"):
            raise DomainError(f"unknown dense_floor {self.dense_floor!r}")
        if self.starved < 0:
            raise DomainError("starved must be non-negative")


@dataclass(frozen=True)
class CampaignConfig:
    n: int
    r: int | None = None  # None samples over all edge sizes
    samples: int = 100
    seed: int = 0
    profile: SampleProfile = SampleProfile()
    budget: SearchBudget = SearchBudget(max_nodes=200_000)
    force: bool = False  # evaluate the non-uniform checker below its proven range
    threads: int = 1

    def __post_init__(self):
        if self.samples < 1:
            raise DomainError("samples must be positive")
        if self.threads < 1:
            raise DomainError("threads must be positive")


@dataclass(frozen=True)
class TrialRecord:
    index: int
    outcome: str
    summary: str


@dataclass(frozen=True)
class CampaignReport:
    kind: str
    params: tuple[tuple[str, str], ...]
    records: tuple[TrialRecord, ...]
    counterexamples: tuple[str, ...] = ()

    def counts(self) -> dict[str, int]:
        c = Counter(rec.outcome for rec in self.records)
        return {name: c.get(name, 0) for name in OUTCOMES}

    def render(self) -> str:
        lines = ["campaign-report v1", f"kind: {self.kind}"]
        for name, value in self.params:
            lines.append(f"param {name}: {value}")
        for rec in self.records:
            lines.append(f"trial {rec.index}: {rec.outcome} | {rec.summary}")
        counts = self.counts()
        lines.append(
            "counts: " + " ".join(f"{name}={counts[name]}" for name in OUTCOMES)
        )
        for i, doc in enumerate(self.counterexamples):
            lines.append(f"counterexample {i}:")
            for ln in doc.rstrip("\n").split("\n"):
                lines.append(f"  {ln}" if ln else "")
        return "\n".join(lines) + "\n"


def trial_seed(master: int, trial: int) -> int:
    """Per-trial RNG seed, stable across runs, platforms, and schedulers."""
    digest = hashlib.sha256(f"{master}:{trial}".encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")


def _universe(n: int, r: int | None) -> list[frozenset[int]]:
    if r is None:
        if n > 16:
            raise PreconditionError(
                f"sampling over all edge sizes enumerates 2^n - 1 subsets; "
                f"n={n} is past the n <= 16 cap"
            )
        return [
            frozenset(c)
            for size in range(1, n + 1)
            for c in combinations(range(n), size)
        ]
    if not 2 <= r <= n:
        raise DomainError(f"need 2 <= r <= n, got r={r}, n={n}")
    return [frozenset(c) for c in combinations(range(n), r)]


def _floor_report(degrees: list[int], r: int | None, mode: str) -> ConditionReport:
    seq = DegreeSequence(tuple(sorted(degrees)))
    if mode == "r-uniform":
        return posa_r_uniform(seq, r)
    return posa_nonuniform(seq, force=True)


def sample_hypergraph(
    n: int, r: int | None, profile: SampleProfile, seed: int
) -> Hypergraph:
    """Draw one instance.  r=None samples across all edge sizes (n <= 16)."""
    if not 1 <= n <= 63:
        raise DomainError(f"need 1 <= n <= 63, got {n}")
    if profile.dense_floor == "r-uniform" and r is None:
        raise DomainError("dense_floor 'r-uniform' needs an edge size r")
    if profile.dense_floor == "non-uniform" and r is not None:
        raise DomainError("dense_floor 'non-uniform' contradicts a fixed edge size")
    universe = _universe(n, r)
    rng = random.Random(seed)
    starved = set(range(min(profile.starved, n)))
    chosen: set[frozenset[int]] = set()
    for members in universe:
        p = (
            profile.starved_probability
            if members & starved
            else profile.edge_probability
        )
        if rng.random() < p:
            chosen.add(members)
    if profile.dense_floor is not None:
        degrees = [0] * n
        for members in chosen:
            for v in members:
                degrees[v] += 1
        # The complete hypergraph satisfies both degree conditions, so
        # saturating vertices one by one always terminates in a pass.
        while not _floor_report(degrees, r, profile.dense_floor).satisfied:
            order = sorted(range(n), key=lambda u: (degrees[u], u))
            added = False
            for v in order:
                for members in universe:
                    if v in members and members not in chosen:
                        chosen.add(members)
                        for u in members:
                            degrees[u] += 1
                        added = True
                if added:
                    break
            if not added:
                raise PreconditionError(
                    "dense floor is unreachable: the complete hypergraph "
                    "does not satisfy the requested condition"
                )
    return Hypergraph(n, chosen)


def _violation_profile(report: ConditionReport) -> str:
    if not report.violations:
        return "none"
    return "; ".join(
        f"tag {v.tag} at index {v.index}" for v in report.violations
    )


def _verdict_word(report: ConditionReport) -> str:
    return "satisfied" if report.satisfied else "violated"


def _refutation_doc(
    campaign: str,
    hg: Hypergraph,
    *,
    r: int | None,
    budget: SearchBudget,
    checks: tuple[tuple[str, str], ...],
    solver_status: str,
    suspect: str,
    extra: tuple[tuple[str, str], ...] = (),
) -> str:
    lines = [
        "refutation v1",
        f"campaign: {campaign}",
        f"n: {hg.n}",
        f"r: {r if r is not None else 'non-uniform'}",
    ]
    for key, value in extra:
        lines.append(f"{key}: {value}")
    lines.append(f"budget-nodes: {budget.max_nodes}")
    for name, verdict in checks:
        lines.append(f"check {name}: {verdict}")
    lines.append(f"solver: {solver_status}")
    lines.append(f"suspect: {suspect}")
    lines.append("hypergraph:")
    lines.append(write_bhg(hg).rstrip("\n"))
    return "\n".join(lines) + "\n"


def _triage(hg: Hypergraph, recheck) -> str:
    """Blame a component for an impossible outcome.

    A refutation of a proven statement means a bug somewhere; narrow it down
    by replaying serialization and the checker before accusing the search.
    """
    round_trip = read_bhg(write_bhg(hg))
    if round_trip != hg:
        return "generator (instance does not survive serialization)"
    if recheck(hg) != recheck(round_trip):
        return "checker (verdict is unstable across re-evaluation)"
    return "solver (search claims non-existence on a covered instance)"


# --- theorem verification -----------------------------------------------------


def _verify_trial(cfg: CampaignConfig, index: int) -> tuple[TrialRecord, str | None]:
    floor = "r-uniform" if cfg.r is not None else "non-uniform"
    profile = (
        cfg.profile
        if cfg.profile.dense_floor is not None
        else replace(cfg.profile, dense_floor=floor)
    )
    hg = sample_hypergraph(cfg.n, cfg.r, profile, trial_seed(cfg.seed, index))
    seq = hg.degree_sequence()
    if cfg.r is not None:
        report = posa_r_uniform(seq, cfg.r)
        checker_name = "r-uniform"
    else:
        report = posa_nonuniform(seq, force=cfg.force or cfg.n <= 40)
        checker_name = "non-uniform"
    if not report.satisfied:
        return (
            TrialRecord(
                index,
                "skip",
                f"checker=violated ({_violation_profile(report)}) edges={hg.num_edges}",
            ),
            None,
        )
    result = find_hamiltonian_berge_cycle(hg, cfg.budget)
    summary = (
        f"checker=satisfied solver={result.status} "
        f"nodes={result.nodes} edges={hg.num_edges}"
    )
    if result.status == "cycle":
        return TrialRecord(index, "pass", summary), None
    if result.status == "unknown":
        return TrialRecord(index, "unknown", summary), None

    def recheck(h: Hypergraph) -> bool:
        s = h.degree_sequence()
        if cfg.r is not None:
            return posa_r_uniform(s, cfg.r).satisfied
        return posa_nonuniform(s, force=True).satisfied

    doc = _refutation_doc(
        "verify",
        hg,
        r=cfg.r,
        budget=cfg.budget,
        checks=((checker_name, "satisfied"),),
        solver_status=result.status,
        suspect=_triage(hg, recheck),
        extra=(("trial", str(index)),)
        + ((("force", "yes"),) if cfg.r is None and cfg.n <= 40 else ()),
    )
    return TrialRecord(index, "fail", summary), doc


def _verify_trial_job(args):
    return _verify_trial(*args)


def _collect(cfg: CampaignConfig, job, worker) -> tuple[list[TrialRecord], list[str]]:
    tasks = [(cfg, t) for t in range(cfg.samples)]
    if cfg.threads > 1 and cfg.samples > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            outcomes = list(pool.map(job, tasks, chunksize=4))
    else:
        outcomes = [worker(cfg, t) for t in range(cfg.samples)]
    records = [rec for rec, _ in outcomes]
    docs = [doc for _, doc in outcomes if doc is not None]
    return records, docs


def verify_theorem_campaign(cfg: CampaignConfig) -> CampaignReport:
    """Sample condition-satisfying instances and demand a cycle on each.

    Any 'fail' record contradicts the proven statement and ships with a
    refutation document naming the suspect component.
    """
    records, docs = _collect(cfg, _verify_trial_job, _verify_trial)
    params = (
        ("n", str(cfg.n)),
        ("r", str(cfg.r) if cfg.r is not None else "non-uniform"),
        ("samples", str(cfg.samples)),
        ("seed", str(cfg.seed)),
        ("budget-nodes", str(cfg.budget.max_nodes)),
    )
    return CampaignReport("verify", params, tuple(records), tuple(docs))


# --- sharpness sweeps ----------------------------------------------------------


def default_sharpness_grid(
    family: str, n_max: int = 12
) -> tuple[tuple[int, int, int | None], ...]:
    """All parameter points for a family with n <= n_max, smallest first.

    Points stay inside the checker's domain (edge size at least 3 and
    n > 2r), which is also where sharpness is claimed.
    """
    fam = family.upper()
    points: list[tuple[int, int, int | None]] = []
    for n in range(4, n_max + 1):
        if fam == "H1":
            for r in range(3, (n - 1) // 2 + 1):
                for k in range(1, r):
                    points.append((n, r, k))
        elif fam == "H2":
            for r in range(3, (n - 1) // 2 + 1):
                for k in range(r, (n - 1) // 2 + 1):
                    points.append((n, r, k))
        elif fam == "H3":
            if n % 2 == 0:
                for r in range(3, (n - 1) // 2 + 1):
                    points.append((n, r, None))
        else:
            raise DomainError(f"unknown family {family!r}")
    return tuple(points)


def sharpness_campaign(
    family: str,
    grid: tuple[tuple[int, int, int | None], ...] | None = None,
    budget: SearchBudget | None = None,
    n_max: int = 12,
) -> CampaignReport:
    """Regenerate a family across a grid and confirm each point is extremal.

    A point passes when the realized degree sequence matches the closed-form
    prediction, the checker flags exactly the designated condition tag, and
    the exact search proves no Hamiltonian Berge cycle exists.
    """
    from .constructions import predicted_degree_sequence

    fam = family.upper()
    grid = grid if grid is not None else default_sharpness_grid(fam, n_max)
    budget = budget or SearchBudget(max_nodes=2_000_000)
    tag = designated_violation_tag(fam)
    records: list[TrialRecord] = []
    docs: list[str] = []
    for index, (n, r, k) in enumerate(grid):
        hg, spec = generate(fam, n, r, k)
        seq = hg.degree_sequence()
        predicted = predicted_degree_sequence(spec)
        seq_ok = seq.values == predicted.values
        report = posa_r_uniform(seq, r)
        expected_index = (n - 2) // 2 if fam == "H3" else k
        violations_ok = (
            len(report.violations) == 1
            and report.violations[0].tag == tag
            and report.violations[0].index == expected_index
        )
        result = find_hamiltonian_berge_cycle(hg, budget)
        label = f"{fam}({n},{r},{k})" if k is not None else f"{fam}({n},{r})"
        summary = (
            f"{label}: sequence={'ok' if seq_ok else 'mismatch'} "
            f"violations={_violation_profile(report)} "
            f"solver={result.status} nodes={result.nodes}"
        )
        if seq_ok and violations_ok and result.status == "none":
            records.append(TrialRecord(index, "pass", summary))
            continue
        if seq_ok and violations_ok and result.status == "unknown":
            records.append(TrialRecord(index, "unknown", summary))
            continue
        records.append(TrialRecord(index, "fail", summary))

        def recheck(h: Hypergraph) -> bool:
            return posa_r_uniform(h.degree_sequence(), r).satisfied

        docs.append(
            _refutation_doc(
                "sharpness",
                hg,
                r=r,
                budget=budget,
                checks=(("r-uniform", _verdict_word(report)),),
                solver_status=result.status,
                suspect=_triage(hg, recheck),
                extra=(
                    ("family", fam),
                    ("k", str(k) if k is not None else "-"),
                    ("violations", _violation_profile(report)),
                ),
            )
        )
    params = (
        ("family", fam),
        ("points", str(len(grid))),
        ("budget-nodes", str(budget.max_nodes)),
    )
    return CampaignReport("sharpness", params, tuple(records), tuple(docs))


# --- conjecture hunting ---------------------------------------------------------


def _conjecture_trial(
    cfg: CampaignConfig, index: int
) -> tuple[TrialRecord, str | None]:
    if cfg.r is None:
        raise DomainError("the conjecture campaign needs an edge size r")
    hg = sample_hypergraph(cfg.n, cfg.r, cfg.profile, trial_seed(cfg.seed, index))
    seq = hg.degree_sequence()
    conj = conjecture_r_uniform(seq, cfg.r)
    posa = posa_r_uniform(seq, cfg.r)
    if not conj.satisfied or posa.satisfied:
        summary = (
            f"conjecture={_verdict_word(conj)} posa={_verdict_word(posa)} "
            f"edges={hg.num_edges} (unqualified)"
        )
        return TrialRecord(index, "skip", summary), None
    result = find_hamiltonian_berge_cycle(hg, cfg.budget)
    summary = (
        f"conjecture=satisfied posa=violated solver={result.status} "
        f"nodes={result.nodes} edges={hg.num_edges}"
    )
    if result.status == "cycle":
        return TrialRecord(index, "pass", summary), None
    if result.status == "unknown":
        return TrialRecord(index, "unknown", summary), None

    def recheck(h: Hypergraph) -> bool:
        s = h.degree_sequence()
        return conjecture_r_uniform(s, cfg.r).satisfied

    doc = _refutation_doc(
        "conjecture",
        hg,
        r=cfg.r,
        budget=cfg.budget,
        checks=(("conjecture", "satisfied"), ("r-uniform", "violated")),
        solver_status=result.status,
        suspect=_triage(hg, recheck),
        extra=(("trial", str(index)),),
    )
    return TrialRecord(index, "fail", summary), doc


def _conjecture_trial_job(args):
    return _conjecture_trial(*args)


def conjecture_search(cfg: CampaignConfig) -> CampaignReport:
    """Hunt for a conjecture counterexample among qualified samples.

    A sample qualifies when it satisfies the conjectured condition but not
    the proven one; a qualified sample with no Hamiltonian Berge cycle would
    refute the conjecture, so it is serialized for independent re-checking.
    Skewed profiles (see ``SampleProfile.starved``) raise the hit rate.
    """
    records, docs = _collect(cfg, _conjecture_trial_job, _conjecture_trial)
    params = (
        ("n", str(cfg.n)),
        ("r", str(cfg.r)),
        ("samples", str(cfg.samples)),
        ("seed", str(cfg.seed)),
        ("budget-nodes", str(cfg.budget.max_nodes)),
        ("edge-probability", repr(cfg.profile.edge_probability)),
        ("starved", str(cfg.profile.starved)),
        ("starved-probability", repr(cfg.profile.starved_probability)),
    )
    return CampaignReport("conjecture", params, tuple(records), tuple(docs))


# --- refutation re-verification ---------------------------------------------------


def reverify_refutation(doc: str) -> bool:
    """Re-run a refutation document from its text alone.

    Returns True when every recorded verdict reproduces: the embedded
    instance parses, recorded checks match recomputation, and the search
    returns the recorded status under the recorded budget.
    """
    try:
        head, sep, tail = doc.partition("\nhypergraph:\n")
        if not sep:
            return False
        lines = head.strip("\n").split("\n")
        if lines[0] != "refutation v1":
            return False
        fields: list[tuple[str, str]] = []
        for ln in lines[1:]:
            key, colon, value = ln.partition(": ")
            if not colon:
                return False
            fields.append((key, value))
        meta = dict(fields)
        hg = read_bhg(tail)
        if hg.n != int(meta["n"]):
            return False
        r = None if meta["r"] == "non-uniform" else int(meta["r"])
        if meta["campaign"] == "sharpness":
            k = None if meta.get("k", "-") == "-" else int(meta["k"])
            regenerated, _ = generate(meta["family"], hg.n, r, k)
            if regenerated != hg:
                return False
        seq = hg.degree_sequence()
        for key, value in fields:
            if not key.startswith("check "):
                continue
            name = key[len("check "):]
            if name == "r-uniform":
                rep = posa_r_uniform(seq, r)
            elif name == "non-uniform":
                rep = posa_nonuniform(seq, force=True)
            elif name == "conjecture":
                rep = conjecture_r_uniform(seq, r)
            else:
                return False
            if _verdict_word(rep) != value:
                return False
        if "violations" in meta:
            if _violation_profile(posa_r_uniform(seq, r)) != meta["violations"]:
                return False
        budget = SearchBudget(max_nodes=int(meta["budget-nodes"]))
        result = find_hamiltonian_berge_cycle(hg, budget)
        return result.status == meta["solver"]
    except (KeyError, ValueError, IndexError):
        return False
