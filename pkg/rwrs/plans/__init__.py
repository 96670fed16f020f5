from .emitter import ReportEmitter
from .presets import Preset, PRESET_NAMES, parse_presets, find_preset

__all__ = [
    'ReportEmitter',
    'Preset',
    'PRESET_NAMES',
    'parse_presets',
    'find_preset',
]

# Optional: Package-level documentation
"""
Run planning and output components including:
- Preset: Named trial budgets (quick / standard / deep)
- ReportEmitter: CSV and JSON emission of experiment reports
"""
