"""Instance and joint file formats."""

from condcompat.io.instance_file import (
    INSTANCE_SCHEMA,
    Instance,
    dump_instance,
    dump_joint,
    format_entry,
    load_instance,
    load_joint,
    parse_instance,
    parse_joint,
)

__all__ = [
    "INSTANCE_SCHEMA",
    "Instance",
    "dump_instance",
    "dump_joint",
    "format_entry",
    "load_instance",
    "load_joint",
    "parse_instance",
    "parse_joint",
]
