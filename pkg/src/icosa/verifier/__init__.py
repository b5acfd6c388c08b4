from .claims import REGISTRY, SCOPE, ClaimSpec, evaluate, list_claims
from .report import Report, render, run, to_dict

__all__ = ["REGISTRY", "SCOPE", "ClaimSpec", "Report", "evaluate", "list_claims", "render", "run", "to_dict"]
