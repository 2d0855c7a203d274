"""Schema-driven normalization of scenario and rule documents.

Schemas live in an OpenAPI-style YAML file; ``$ref`` pointers are resolved
with jsonref and payloads are validated with jsonschema. Every object schema
closes its properties, so undeclared keys are rejected. Declared defaults are
filled into the returned copy.
"""

from __future__ import annotations

import copy
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Iterator, Optional

import jsonref
import yaml
from jsonschema import Draft202012Validator, validators
from jsonschema.exceptions import ValidationError as SchemaViolation
from jsonschema.exceptions import best_match

from dmmm_scheduler.errors import MissingKeyError, ScenarioParseError, SchemaTypeError, UnknownKeyError

DEFAULT_SCHEMA_FILE = Path(__file__).resolve().parent.parent / "schemas" / "scenario.yml"


def _with_defaults(validator_class: Any) -> Any:
    validate_properties = validator_class.VALIDATORS["properties"]

    def fill_defaults(validator: Any, properties: Dict[str, Any], instance: Any,
                      schema: Dict[str, Any]) -> Iterator[SchemaViolation]:
        if validator.is_type(instance, "object"):
            for key, subschema in properties.items():
                if "default" in subschema:
                    instance.setdefault(key, copy.deepcopy(subschema["default"]))
        yield from validate_properties(validator, properties, instance, schema)

    return validators.extend(validator_class, {"properties": fill_defaults})


DefaultingValidator = _with_defaults(Draft202012Validator)


@lru_cache(maxsize=None)
def _load_components(schema_file: str) -> Dict[str, Any]:
    try:
        with open(schema_file, encoding="utf-8") as fh:
            document = yaml.safe_load(fh)
    except (OSError, UnicodeDecodeError, yaml.YAMLError) as exc:
        raise ScenarioParseError(f"PARSE ERROR: unable to load schema file {schema_file}: {exc}") from exc
    resolved = jsonref.replace_refs(document, proxies=False)
    return resolved.get("components", {}).get("schemas", {})


def load_schema(schema_name: str, schema_file: Optional[str] = None) -> Dict[str, Any]:
    components = _load_components(str(schema_file or DEFAULT_SCHEMA_FILE))
    if schema_name not in components:
        raise KeyError(f"schema {schema_name!r} is not declared")
    return components[schema_name]


def map_to_schema(data: Any, schema_name: str, schema_file: Optional[str] = None) -> Any:
    """Validate ``data`` against ``schema_name`` and return a copy with defaults filled."""
    schema = load_schema(schema_name, schema_file)
    mapped = copy.deepcopy(data)
    error = best_match(DefaultingValidator(schema).iter_errors(mapped))
    if error is not None:
        raise _translate(error, schema_name)
    return mapped


def _translate(error: SchemaViolation, schema_name: str) -> Exception:
    location = schema_name + "".join(
        f"[{part}]" if isinstance(part, int) else f".{part}" for part in error.absolute_path)
    if error.validator == "additionalProperties":
        return UnknownKeyError(f"SCHEMA ERROR: {error.message} at {location}")
    if error.validator == "required":
        return MissingKeyError(f"SCHEMA ERROR: {error.message} at {location}")
    return SchemaTypeError(f"TYPE ERROR: {location}: {error.message}")
