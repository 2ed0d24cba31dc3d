from importlib.metadata import PackageNotFoundError, metadata

from .settings import LabSettingsModel, get_lab_settings

try:
    metadata = metadata('mimolab')
    __version__ = metadata.get('Version')
except PackageNotFoundError:
    # running from a source checkout
    __version__ = '0+unknown'

__all__ = ('LabSettingsModel', 'get_lab_settings', '__version__')
