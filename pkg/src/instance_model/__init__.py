"""Instance definition, file format and random generation."""

from src.instance_model.generator import generate_random_instance
from src.instance_model.parser import (
    InstanceFormatError,
    load_instance,
    parse_instance,
    save_instance,
    serialize_instance,
)

__all__ = [
    "InstanceFormatError",
    "generate_random_instance",
    "load_instance",
    "parse_instance",
    "save_instance",
    "serialize_instance",
]
