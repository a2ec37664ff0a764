# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""Saving and loading scenario configuration. Scenarios are normally TOML
files, optionally chained together with an ``inherit`` key; a JSON document
with the same nested layout is accepted too, for machine-generated sweeps.

"""
from __future__ import absolute_import, division, print_function

__all__ = '''
Configuration
load_json
load_tomls_with_inheritance
merge_nested_dicts
'''.split()

import json

from pwkit.io import Path

from .bases import ConfigurationError
from .logs import warn


def merge_nested_dicts(base, more):
    """Given two dictionaries that may contain sub-dictionaries, merge *more* into
    *base*, overwriting duplicated values.

    """
    for key, val in more.items():
        if isinstance(val, dict):
            base_val = base.setdefault(key, {})

            if not isinstance(base_val, dict):
                raise ConfigurationError('trying to merge a table named "%s" into a non-table %r'
                                         % (key, base_val))

            merge_nested_dicts(base_val, val)
        else:
            base[key] = val

    return base


def load_tomls_with_inheritance(path):
    """Load a TOML file and everything it inherits from.

    The ``inherit`` key may be a string or a list of strings, each a path
    relative to the file that names it. Files listed later in the chain are
    overridden by the ones that inherit from them.

    """
    import pytoml

    to_load = [Path(path)]
    dicts = []

    while len(to_load):
        this_path = to_load.pop(0)

        try:
            with this_path.open('rt') as f:
                this_dict = pytoml.load(f)
        except pytoml.TomlError as e:
            raise ConfigurationError('cannot parse scenario file "%s": %s' % (this_path, e)) from e
        except OSError as e:
            raise ConfigurationError('cannot read scenario file "%s": %s' % (this_path, e)) from e

        inherit_spec = this_dict.pop('inherit', None)

        if inherit_spec is None:
            to_inherit = []
        elif isinstance(inherit_spec, str):
            to_inherit = [inherit_spec]
        elif isinstance(inherit_spec, list):
            to_inherit = inherit_spec
        else:
            raise ConfigurationError('unhandled "inherit" specification in scenario file "%s": %r'
                                     % (this_path, inherit_spec))

        for item in to_inherit:
            to_load.append(this_path.parent / item)

        dicts.append(this_dict)

    data = {}

    for item in dicts[::-1]:
        merge_nested_dicts(data, item)

    return data


def load_json(path):
    try:
        with Path(path).open('rt') as f:
            data = json.load(f)
    except ValueError as e:
        raise ConfigurationError('cannot parse scenario file "%s": %s' % (path, e)) from e

    if not isinstance(data, dict):
        raise ConfigurationError('scenario file "%s" must hold a JSON object at top level' % path)

    return data


class Configuration(object):
    """A simple class for saving and loading configuration from TOML or JSON.

    Configuration values are declared as class properties with default
    values specified. If the value of a class property is a type that is a
    subclass of Configuration, that value is filled in by creating an
    instance of that type and reading in its values in the same way.

    A default of None means "not given"; such keys are left out of generated
    TOML, which has no null.

    """
    __section__ = None

    def __init__(self):
        # Sub-configurations need their own default instances.

        for name, default in self.__config_items():
            if isinstance(default, type) and issubclass(default, Configuration):
                setattr(self, name, default())


    @classmethod
    def __config_items(cls):
        for name, default in cls.__dict__.items():
            if name[0] != '_' and (isinstance(default, type) or not callable(default)) \
               and not isinstance(default, (property, classmethod, staticmethod)):
                yield name, default


    @classmethod
    def known_sections(cls):
        """Map each TOML section name under this configuration to its set of keys."""
        sections = {}
        keys = sections.setdefault(cls.__section__, set())

        for name, default in cls.__config_items():
            if isinstance(default, type) and issubclass(default, Configuration):
                sections.update(default.known_sections())
            else:
                keys.add(name)

        return sections


    @classmethod
    def unknown_entries(cls, obj):
        """List ``section.key`` strings in *obj* that no configuration item reads."""
        known = cls.known_sections()
        extra = []

        for section, content in sorted(obj.items()):
            if section not in known:
                extra.append(section)
            elif isinstance(content, dict):
                extra.extend('%s.%s' % (section, k) for k in sorted(content)
                             if k not in known[section])

        return extra


    @classmethod
    def from_collection(cls, obj):
        inst = cls()
        my_section = obj.get(cls.__section__, {})

        if not isinstance(my_section, dict):
            raise ConfigurationError('configuration item "%s" should be a table, but is instead %r'
                                     % (cls.__section__, my_section))

        for name, default in cls.__config_items():
            if isinstance(default, type) and issubclass(default, Configuration):
                setattr(inst, name, default.from_collection(obj))
            elif name in my_section:
                setattr(inst, name, my_section[name])

        return inst


    def to_collection(self, obj, skip_none=False):
        my_section = obj.setdefault(self.__class__.__section__, {})

        for name, default in self.__config_items():
            if isinstance(default, type) and issubclass(default, Configuration):
                getattr(self, name).to_collection(obj, skip_none=skip_none)
            else:
                value = getattr(self, name)

                if value is None and skip_none:
                    continue

                if isinstance(value, tuple):
                    value = list(value)

                my_section[name] = value

        return self


    def to_dict(self):
        """Return every setting, defaults included, as a nested plain dict."""
        data = {}
        self.to_collection(data)
        return data


    @classmethod
    def load_raw(cls, path):
        """Read the nested dict behind *path*, choosing the parser by suffix."""
        path = Path(path)

        if not path.exists():
            raise ConfigurationError('scenario file "%s" does not exist' % path)

        if path.suffix.lower() == '.json':
            return load_json(path)
        return load_tomls_with_inheritance(path)


    @classmethod
    def from_path(cls, path):
        """Load a TOML (with inheritance) or JSON file. Sections and keys that no
        configuration item reads are reported and ignored.

        """
        data = cls.load_raw(path)

        for entry in cls.unknown_entries(data):
            warn('ignoring unknown setting "%s" in %s', entry, path)

        try:
            return cls.from_collection(data)
        except ConfigurationError:
            raise
        except Exception as e:
            raise ConfigurationError('error loading configuration from file "%s"' % path) from e


    @classmethod
    def update_toml(cls, path):
        """Update a config file, preserving existing known entries but adding values
        for parameters that weren't given values explicitly before.

        Note that this intentionally does not use the inheritance scheme,
        since we don't want to add all of the inherited values to the existing
        file.

        """
        import pytoml

        path = Path(path)

        try:
            with path.open('rt') as f:
                data = pytoml.load(f)
        except FileNotFoundError:
            data = {}

        inst = cls.from_collection(data)
        inst.to_collection(data, skip_none=True)

        with path.open('wt') as f:
            f.write(pytoml.dumps(data, sort_keys=True))


    @classmethod
    def generate_config_cli(cls, prog_name, args):
        from argparse import ArgumentParser
        ap = ArgumentParser(prog=prog_name)
        ap.add_argument('config_path', metavar='CONFIG-PATH',
                        help='The path of the config file to create or update.')
        settings = ap.parse_args(args=args)
        cls.update_toml(settings.config_path)
