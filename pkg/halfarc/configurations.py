# -*- coding: utf-8 -*-
"""Settings of the analysis, read from an optional configuration file."""

import collections.abc
import os.path

import jsonschema

import halfarc.formats
from halfarc.classifier import DEFAULT_EXHAUSTIVE_THRESHOLD, MODES
from halfarc.permutations import DEFAULT_ELEMENT_CAP

#: Name of the file searched from the working directory up to root
CONFIG_FILENAME = ".halfarc.yaml"


class ConfigSettings(collections.abc.MutableMapping):
    """Manages the settings of an analysis run."""

    #: Settings that are currently permitted
    valid_settings = ("max_group_order", "mode", "exhaustive_threshold", "workers", "format")

    def __init__(self, **overrides):
        self._settings = {
            "max_group_order": DEFAULT_ELEMENT_CAP,
            "mode": "auto",
            "exhaustive_threshold": DEFAULT_EXHAUSTIVE_THRESHOLD,
            "workers": 1,
            "format": "json",
        }
        for key, value in overrides.items():
            self[key] = value

    def __getitem__(self, key):
        self._validate_key(key)
        return self._settings[key]

    def __setitem__(self, key, value):
        self._validate_key(key)
        self._validate_value(key, value)
        self._settings[key] = value

    def __delitem__(self, key):
        raise KeyError("settings cannot be removed [{0}]".format(key))

    def __iter__(self):
        return iter(self._settings)

    def __len__(self):
        return len(self._settings)

    @staticmethod
    def _validate_value(key, value):
        """Validate the values written as settings.

        Args:
            key (str): setting
            value: new value to use for the setting

        Raises:
            TypeError: if the value has the wrong type
            ValueError: if the value is out of range
        """
        if key in ("max_group_order", "exhaustive_threshold", "workers"):
            if not isinstance(value, int) or isinstance(value, bool):
                msg = '"{0}" must be an integer [current type is {1}]'
                raise TypeError(msg.format(key, type(value).__name__))
            if value < 1:
                raise ValueError('"{0}" must be positive [got {1}]'.format(key, value))

        if key == "mode":
            if value not in MODES:
                msg = 'unknown mode "{0}". Allowed values are {1}'
                raise ValueError(msg.format(value, ", ".join(MODES)))

        if key == "format":
            if not isinstance(value, str):
                raise TypeError('"format" must be a valid string')
            if value not in halfarc.formats.report_formats():
                msg = "unknown report format. Allowed values are {0}"
                raise ValueError(msg.format(", ".join(halfarc.formats.report_formats())))

    def _validate_key(self, key):
        if key not in self.valid_settings:
            msg = "allowed settings are {0}".format(", ".join(self.valid_settings))
            raise KeyError(msg)

    def __getattr__(self, name):
        if name.startswith("_") or name not in self.valid_settings:
            msg = "{0} object has no attribute {1}"
            raise AttributeError(msg.format(type(self).__name__, name))
        return self._settings[name]


#: Schema for the configuration file
_HALFARC_CFG_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "max_group_order": {
            "description": "Largest number of elements enumerated for a group",
            "type": "integer",
            "minimum": 1,
        },
        "mode": {
            "description": "Which normal subgroups quotients are taken by",
            "enum": list(MODES),
        },
        "exhaustive_threshold": {
            "description": "Largest group order analyzed exhaustively in auto mode",
            "type": "integer",
            "minimum": 1,
        },
        "workers": {
            "description": "Number of processes used by the sweep",
            "type": "integer",
            "minimum": 1,
        },
        "format": {"description": "Format of the reports", "type": "string"},
    },
}


def load_settings(configuration_file):
    """Reads settings from a configuration file.

    Args:
        configuration_file (str): path to a JSON, YAML or TOML file

    Returns:
        ConfigSettings: defaults overridden by the content of the file

    Raises:
        IOError: if the file does not exist
        ValueError: if the format of the file is not recognized
        jsonschema.ValidationError: if the content does not conform to the schema
    """
    if not os.path.isfile(configuration_file):
        msg = 'configuration file "{0}" does not exist'
        raise IOError(msg.format(configuration_file))

    extension = os.path.splitext(configuration_file)[1].lstrip(".")
    extension = "yaml" if extension == "yml" else extension
    if extension not in halfarc.formats.loaders():
        msg = '"{0}" is not a valid format [Allowed formats are: {1}]'
        raise ValueError(msg.format(extension, ", ".join(halfarc.formats.loaders())))

    with open(configuration_file) as cfg_stream:
        configuration = halfarc.formats.FORMATTERS[extension].load(cfg_stream) or {}
    jsonschema.validate(configuration, _HALFARC_CFG_SCHEMA)
    return ConfigSettings(**configuration)


def search_file_in_path(filename, start_dir=None):
    """Searches for a file starting from a directory and proceeding up to root.

    Args:
        filename (str): name of the file to look for
        start_dir (path): directory where to start looking for the file

    Returns:
        Absolute path to the file

    Raises:
        IOError: if the file is not found.
    """
    if os.path.isabs(filename):
        if os.path.isfile(filename):
            return filename
        raise IOError("file not found [{0}]".format(filename))

    current = os.path.realpath(os.path.abspath(start_dir or os.getcwd()))
    while True:
        candidate = os.path.join(current, filename)
        if os.path.isfile(candidate):
            return candidate
        parent = os.path.dirname(current)
        if parent == current:
            raise IOError("file not found [{0}]".format(filename))
        current = parent


def retrieve_settings(settings=None, **overrides):
    """Merges overrides over a set of settings.

    Args:
        settings (ConfigSettings or None): base settings, defaults if None
        **overrides: values that take precedence; None values are ignored

    Returns:
        ConfigSettings: a new object with the merged settings
    """
    merged = ConfigSettings(**dict(settings or {}))
    for key, value in overrides.items():
        if value is not None:
            merged[key] = value
    return merged
