# -*- coding: utf-8 -*-
"""Formats used to read settings and write reports, and utilities to manage them"""

import abc
import io
import json

import halfarc

#: Maps the format name to the formatter object
FORMATTERS = {}


class Loader(abc.ABC):  # pylint: disable=too-few-public-methods
    """Abstract base class for something that could load an object from a stream."""

    @abc.abstractmethod
    def load(self, stream):
        """Load an object from stream and returns it.

        Args:
            stream: any file-like object

        Returns:
            the object loaded from the stream
        """


class Dumper(abc.ABC):  # pylint: disable=too-few-public-methods
    """Abstract base class for something that could dump an object to a stream."""

    @abc.abstractmethod
    def dump(self, obj, stream):
        """Dump an object to a stream.

        Args:
            obj: object to be dumped
            stream: any file-like object
        """


def formatter(name, attribute=None):
    """Register a class as a valid formatter.

    Args:
        name (str): name of the formatter
        attribute (str or None): name of the mnemonic attribute
            that will be created in the root module

    Returns:
       The actual decorator

    Raises:
        TypeError: if the type of any argument is not correct
        ValueError: if the attribute to be set is already present
    """
    if not isinstance(name, str):
        raise TypeError('the argument "name" needs to be of string type')

    if not isinstance(attribute, str) and attribute is not None:
        raise TypeError('the argument "attribute" needs to be of string type')

    if attribute is not None and hasattr(halfarc, attribute):
        raise ValueError("halfarc.{0} is already defined".format(attribute))

    def _decorator(cls):
        FORMATTERS[name] = cls()
        if attribute:
            setattr(halfarc, attribute, name)
        return cls

    return _decorator


def loaders():
    """Names of the formats that can read settings."""
    return sorted(name for name, obj in FORMATTERS.items() if isinstance(obj, Loader))


def report_formats():
    """Names of the formats that can write reports."""
    return sorted(
        name
        for name, obj in FORMATTERS.items()
        if isinstance(obj, Dumper) and getattr(obj, "writes_reports", True)
    )


def dumps(obj, fmt):
    """Dumps an object to a string in the given format.

    Raises:
        ValueError: if the format is unknown or cannot write
    """
    writer = FORMATTERS.get(fmt)
    if not isinstance(writer, Dumper):
        msg = '"{0}" cannot be used to write [allowed formats are: {1}]'
        raise ValueError(msg.format(fmt, ", ".join(report_formats())))
    stream = io.StringIO()
    writer.dump(obj, stream)
    return stream.getvalue()


@formatter("json", attribute="JSON")
class JsonFormatter(Dumper, Loader):
    """Formatter for JSON"""

    def load(self, stream):
        return json.load(stream)

    def dump(self, obj, stream):
        json.dump(obj, stream, indent=2, sort_keys=True)
        stream.write("\n")


@formatter("table", attribute="TABLE")
class TableFormatter(Dumper):
    """Plain text rendering of reports.

    Sweep reports are laid out one family per block, listing the parameters
    found basic of independent-cycle type next to the predicted forms. Other
    reports are printed as indented ``key: value`` lines.
    """

    def dump(self, obj, stream):
        if obj.get("kind") == "sweep-report":
            lines = self._sweep_lines(obj)
        else:
            lines = self._generic_lines(obj, 0)
        stream.write("\n".join(lines) + "\n")

    @staticmethod
    def _sweep_lines(obj):
        lines = ["{0:<6} {1:<12} {2:<8} {3}".format("family", "graph", "group", "forms")]
        for family in obj["families"]:
            lines.append(
                "{0:<6} {1:<12} {2:<8} {3}".format(
                    family["family"], family["graph"], family["group"], ", ".join(family["forms"])
                )
            )
            found = " ".join("({0},{1})".format(r, s) for r, s in family["independent_cycle"])
            lines.append("       independent-cycle: {0}".format(found or "none"))
            mismatches = " ".join("({0},{1})".format(r, s) for r, s in family["mismatches"])
            lines.append("       mismatches: {0}".format(mismatches or "none"))
        summary = obj["summary"]
        lines.append(
            "cells: {0}  mismatches: {1}  violations: {2}  skipped: {3}".format(
                summary["cells"], summary["mismatches"], summary["violations"], summary["skipped"]
            )
        )
        return lines

    def _generic_lines(self, obj, level):
        indent = "  " * level
        lines = []
        for key in sorted(obj):
            value = obj[key]
            if isinstance(value, dict):
                lines.append("{0}{1}:".format(indent, key))
                lines.extend(self._generic_lines(value, level + 1))
            elif isinstance(value, list) and value and isinstance(value[0], dict):
                lines.append("{0}{1}:".format(indent, key))
                for item in value:
                    lines.append("{0}  -".format(indent))
                    lines.extend(self._generic_lines(item, level + 2))
            else:
                lines.append("{0}{1}: {2}".format(indent, key, json.dumps(value)))
        return lines


try:
    from ruamel.yaml import YAML

    @formatter("yaml", attribute="YAML")
    class YamlFormatter(Dumper, Loader):
        """Formatter for YAML"""

        def load(self, stream):
            return YAML(typ="safe").load(stream)

        def dump(self, obj, stream):
            yaml = YAML(typ="safe", pure=True)
            yaml.default_flow_style = False
            yaml.dump(obj, stream)

except ImportError:  # pragma: no cover
    pass  # pragma: no cover


try:
    import toml

    @formatter("toml", attribute="TOML")
    class TomlFormatter(Dumper, Loader):
        """Formatter for TOML, used for settings files only"""

        #: TOML has no null value, so reports are not written in it
        writes_reports = False

        def load(self, stream):
            return toml.load(stream)

        def dump(self, obj, stream):
            toml.dump(obj, stream)

except ImportError:  # pragma: no cover
    pass  # pragma: no cover
