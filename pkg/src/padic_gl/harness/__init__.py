from .generators import CORPUS, GeneratorConfig, Instance, Mode, corpus_instances, generate_instance
from .campaign import CampaignResult, check_instance, run_campaign

__all__ = [
    "CORPUS",
    "GeneratorConfig",
    "Instance",
    "Mode",
    "corpus_instances",
    "generate_instance",
    "CampaignResult",
    "check_instance",
    "run_campaign",
]
