"""Mass verification of the critical-point bounds."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..gauss_lucas import verify_theorem
from ..polynomial import format_poly
from .generators import GeneratorConfig, Instance, corpus_instances, generate_instance


@dataclass
class CampaignResult:
    total: int
    corpus_size: int
    tight_instances: int
    violations: list[dict] = field(default_factory=list)
    elapsed: float = 0.0  # milliseconds

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "corpus_size": self.corpus_size,
            "tight_instances": self.tight_instances,
            "violations": self.violations,
            "elapsed": self.elapsed,
        }


def check_instance(inst: Instance) -> tuple[bool, dict | None]:
    """Verify one instance; return ``(tight, violation_record_or_None)``."""
    rep = verify_theorem(inst.poly, inst.prime, inst.center)
    failed = []
    if not rep.corollary1_holds:
        failed.append(1)
    if not rep.corollary2_holds:
        failed.append(2)
    if not rep.corollary3_holds:
        failed.append(3)
    violation = None
    if not rep.all_hold or failed:
        text = format_poly(inst.poly)
        violation = {
            "poly": text,
            "prime": inst.prime,
            "center": str(inst.center),
            # '=' keeps argparse from reading a leading '-' as an option
            "replay": f"padic-gl analyze --prime {inst.prime} --poly={text} --center={inst.center}",
            "failing_k": rep.failing_k,
            "failing_corollaries": failed,
        }
    return rep.tight, violation


def _check_index(args):
    config, index = args
    return check_instance(generate_instance(config, index))


def run_campaign(config: GeneratorConfig, jobs: int = 1, with_corpus: bool = True) -> CampaignResult:
    """Verify the corpus and then ``config.trials`` generated instances.

    ``total`` counts generated instances only; results are gathered in
    index order so the outcome does not depend on ``jobs``.
    """
    start = time.perf_counter()
    corpus = corpus_instances() if with_corpus else []
    outcomes = [check_instance(inst) for inst in corpus]
    work = [(config, i) for i in range(config.trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes.extend(pool.map(_check_index, work, chunksize=64))
    else:
        outcomes.extend(map(_check_index, work))
    result = CampaignResult(
        total=config.trials,
        corpus_size=len(corpus),
        tight_instances=sum(1 for tight, _ in outcomes if tight),
        violations=[v for _, v in outcomes if v is not None],
    )
    result.elapsed = round((time.perf_counter() - start) * 1000, 3)
    return result
