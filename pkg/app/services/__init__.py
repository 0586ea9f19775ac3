from .data_loader import InputRepository
from .instances import InstanceSampler, trial_rng
from .smith import smith_decomposition, smith_normal_form
from .verification import VerificationRunner

__all__ = [
    "InputRepository",
    "InstanceSampler",
    "VerificationRunner",
    "smith_decomposition",
    "smith_normal_form",
    "trial_rng",
]
