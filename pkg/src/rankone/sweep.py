"""Batch verification over many (variety, lam, mu) triples.

A sweep enumerates every pair of globally generated bundles whose weight
coordinates (and, for ``P1xP1`` inductions, bidegrees) are at most
``max_coeff``, certifies each pair, and assembles a JSON report whose
ordering depends only on the configuration.
"""
from __future__ import annotations

import itertools
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from . import __version__, catalog, models
from .catalog import Treatment
from .errors import ConfigError
from .multiply import Verdict, check_surjectivity
from .rootsys import Weight
from .wonderful import WonderfulVariety, pic_plus_contains, variety_from_config

log = logging.getLogger(__name__)

SCHEMA = 1

# Induced fixtures used by the standard sweep; each exercises a different
# ambient type around a catalog fiber.
INDUCED_FIXTURES = (
    {"induction": {"ambient": {"type": "B", "rank": 4}, "levi": [2, 3, 4],
                   "fiber": {"family": "9B", "n": 3}, "map": {"1": 2, "2": 3, "3": 4}}},
    {"induction": {"ambient": {"type": "C", "rank": 4}, "levi": [3, 4],
                   "fiber": {"family": "9C", "n": 2}, "map": {"1": 3, "2": 4}}},
    {"induction": {"ambient": {"type": "F", "rank": 4}, "levi": [2, 3, 4],
                   "fiber": {"family": "9C", "n": 3}, "map": {"1": 4, "2": 3, "3": 2}}},
)

P1XP1_FIXTURES = (
    {"induction": {"ambient": {"type": "A", "rank": 3}, "levi": [1],
                   "fiber": {"family": "P1xP1"}, "map": {"1": 1}}},
    {"induction": {"ambient": {"type": "B", "rank": 4}, "levi": [4],
                   "fiber": {"family": "P1xP1"}, "map": {"1": 4}}},
)


def standard_varieties() -> list[dict]:
    """Catalog families 9B/9C for n = 2..6, case 15, P1xP1 and the induced fixtures."""
    docs = [{"family": "9B", "n": n} for n in range(2, 7)]
    docs += [{"family": "9C", "n": n} for n in range(2, 7)]
    docs += [{"family": "15"}, {"family": "P1xP1"}]
    docs += [dict(d) for d in INDUCED_FIXTURES]
    return docs


@dataclass
class SweepConfig:
    varieties: list
    max_coeff: int = 3
    jobs: int = 1
    output: str | None = None
    with_oracle: bool = False
    p1xp1_max_degree: int | None = None  # defaults to max_coeff

    def __post_init__(self):
        if not isinstance(self.varieties, list) or not self.varieties:
            raise ConfigError("sweep needs a nonempty list of varieties")
        if int(self.max_coeff) < 0:
            raise ConfigError(f"max_coeff must be >= 0, got {self.max_coeff}")
        if int(self.jobs) < 1:
            raise ConfigError(f"jobs must be >= 1, got {self.jobs}")
        self.max_coeff = int(self.max_coeff)
        self.jobs = int(self.jobs)

    @classmethod
    def from_dict(cls, doc: dict) -> "SweepConfig":
        if not isinstance(doc, dict):
            raise ConfigError("sweep config must be a JSON object")
        known = {"varieties", "max_coeff", "jobs", "output", "with_oracle", "p1xp1_max_degree"}
        unknown = set(doc) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        if "varieties" not in doc:
            raise ConfigError("sweep config has no 'varieties'")
        return cls(**doc)

    def to_dict(self) -> dict:
        return {
            "varieties": self.varieties,
            "max_coeff": self.max_coeff,
            "with_oracle": self.with_oracle,
            "p1xp1_max_degree": self.p1xp1_max_degree,
        }


def pic_plus_weights(X: WonderfulVariety, max_coeff: int) -> list[Weight]:
    """All ``lam`` in pic+ with every coordinate in ``0..max_coeff``, sorted.

    Enumerated as nonnegative combinations of the Picard basis (each basis
    weight is nonzero and dominant, so coefficients never exceed ``max_coeff``).
    """
    basis = X.pic_basis
    rank = X.ambient.rank
    found = set()
    for coeffs in itertools.product(range(max_coeff + 1), repeat=len(basis)):
        w = tuple(sum(c * b[j] for c, b in zip(coeffs, basis)) for j in range(rank))
        if max(w, default=0) <= max_coeff:
            found.add(w)
    out = sorted(found)
    assert all(pic_plus_contains(X, w) for w in out)
    return out


def _parabolic_characters(X: WonderfulVariety, max_coeff: int) -> list[Weight]:
    outer = [i - 1 for i in X.outer]
    out = []
    for vals in itertools.product(range(max_coeff + 1), repeat=len(outer)):
        w = [0] * X.ambient.rank
        for i, v in zip(outer, vals):
            w[i] = v
        out.append(tuple(w))
    return out


def _oracle_for(X: WonderfulVariety, cert) -> dict | None:
    fib = X.fiber
    if X.treatment is Treatment.P1XP1:
        (k, l) = cert.degrees
        return models.oracle_check(models.p1xp1_model(), k, l).to_dict()
    if X.treatment is Treatment.BOREL_WEIL and fib.model is not None and fib.pic_rank == 1:
        model = models.GradedModel(*fib.model)
        d = catalog.nonnegative_coefficients(fib.pic_generators, cert.lam)[0]
        e = catalog.nonnegative_coefficients(fib.pic_generators, cert.mu)[0]
        return models.oracle_check(model, d, e).to_dict()
    return None


def certify_variety(doc: dict, max_coeff: int, with_oracle: bool = False,
                    p1xp1_max_degree: int | None = None) -> list[dict]:
    """Certificates (as dicts) for every pic+ pair of one variety, in sorted order."""
    X = variety_from_config(doc)
    results = []
    if X.treatment is Treatment.P1XP1:
        top = max_coeff if p1xp1_max_degree is None else p1xp1_max_degree
        chars = _parabolic_characters(X, max_coeff)
        degs = list(itertools.product(range(top + 1), repeat=2))
        bundles = [(c, d) for c in chars for d in degs]
        pairs = [((a, da), (b, db)) for (a, da), (b, db) in itertools.product(bundles, repeat=2)]
        for (lam, dl), (mu, dm) in pairs:
            results.append(_one(X, lam, mu, (dl, dm), with_oracle))
    else:
        weights = pic_plus_weights(X, max_coeff)
        for lam, mu in itertools.product(weights, repeat=2):
            results.append(_one(X, lam, mu, None, with_oracle))
    return results


def _one(X, lam, mu, degrees, with_oracle) -> dict:
    try:
        cert = check_surjectivity(X, lam, mu, degrees=degrees)
    except (ValueError, LookupError) as exc:
        return {"variety": X.label, "lambda": list(lam), "mu": list(mu), "error": str(exc)}
    doc = cert.to_dict()
    if with_oracle:
        oracle = _oracle_for(X, cert)
        if oracle is not None:
            doc["oracle"] = oracle
    return doc


def _summarise(results: Sequence[dict], labels: Sequence[str]) -> dict:
    by_verdict: dict = {}
    failed = errors = oracle_checks = oracle_mismatch = 0
    for r in results:
        if "error" in r:
            errors += 1
            continue
        v = r["verdict"]
        by_verdict[v] = by_verdict.get(v, 0) + 1
        if v == Verdict.FAILED.value:
            failed += 1
        if "oracle" in r:
            oracle_checks += 1
            if r["oracle"]["surjective"] != (v != Verdict.FAILED.value):
                oracle_mismatch += 1
    return {
        "varieties": list(labels),
        "pairs": len(results),
        "failed": failed,
        "errors": errors,
        "by_verdict": dict(sorted(by_verdict.items())),
        "oracle_checks": oracle_checks,
        "oracle_mismatches": oracle_mismatch,
        "ok": failed == 0 and errors == 0 and oracle_mismatch == 0,
    }


def run_sweep(config: SweepConfig) -> dict:
    """Run the sweep and return the report document (also written if ``output`` is set)."""
    labels = []
    for doc in config.varieties:
        try:
            labels.append(variety_from_config(doc).label)
        except (ValueError, LookupError) as exc:
            raise ConfigError(f"bad variety description {doc!r}: {exc}") from exc
    args = [(doc, config.max_coeff, config.with_oracle, config.p1xp1_max_degree)
            for doc in config.varieties]
    if config.jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(certify_variety, *zip(*args)))
    else:
        chunks = [certify_variety(*a) for a in args]
    # merge in configuration order; each chunk is already sorted by (lam, mu)
    results = [r for chunk in chunks for r in chunk]
    report = {
        "schema": SCHEMA,
        "version": __version__,
        "config": config.to_dict(),
        "results": results,
        "summary": _summarise(results, labels),
    }
    if config.output:
        with open(config.output, "w") as fh:
            fh.write(dump_report(report))
        log.info("wrote %d certificates to %s", len(results), config.output)
    return report


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=1, sort_keys=True) + "\n"


def brute_force_interval(gamma: Sequence[int], dual: Sequence[int], upto: int) -> list[int]:
    """Every ``m`` in ``0..upto`` with ``dual - m gamma`` dominant, by direct scan."""
    return [m for m in range(upto + 1) if all(a - m * g >= 0 for a, g in zip(dual, gamma))]
