from src.models.module_vector import ModuleVector
from src.models.realization import CartanData, Realization
from src.models.ring_spec import RingKind, RingSpec
from src.models.weight_module import ModuleKind, SupportPredicate, WeightModule
from src.models.weyl import WeylElement

__all__ = [
    "CartanData",
    "ModuleKind",
    "ModuleVector",
    "Realization",
    "RingKind",
    "RingSpec",
    "SupportPredicate",
    "WeightModule",
    "WeylElement",
]
