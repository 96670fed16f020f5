from .scenery import SceneryField, builtin_scenery
from .walk_engine import builtin_model, simulate

__all__ = [
    'SceneryField',
    'builtin_scenery',
    'builtin_model',
    'simulate',
]
