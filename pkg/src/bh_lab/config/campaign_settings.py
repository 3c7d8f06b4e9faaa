from dataclasses import dataclass


@dataclass(frozen=True)
class CampaignSettings:
    # Documented default seed for reproducible campaigns
    default_seed: int = 42
    # Default number of trials per verification campaign
    default_trials: int = 200
    # Largest tensor order drawn by random campaigns
    max_order: int = 4
    # Largest dimension per axis drawn by random campaigns
    max_dim: int = 6
    # Random families searched per summing/diagnostic trial
    family_trials: int = 20
    # Vectors per random family
    family_size: int = 4
    # Default dimension per slot for BH campaigns
    bh_dim: int = 2
