from hierarchy_forge.cli.config import Command, JobConfig, OutputFormat, TimeMode
from hierarchy_forge.cli.main import cli
from hierarchy_forge.cli.render import render_equation, render_structure, render_summary, summary_table
from hierarchy_forge.cli.serialization import (
    SCHEMA_VERSION,
    decode,
    deserialize,
    dumps,
    encode,
    equation_document,
    equation_flow,
    fingerprint,
    load_document,
    serialize,
)
from hierarchy_forge.cli.summary import VerificationSummary

__all__ = [
    # Configuration
    "Command",
    "JobConfig",
    "OutputFormat",
    "TimeMode",
    # Serialization
    "SCHEMA_VERSION",
    "encode",
    "decode",
    "serialize",
    "deserialize",
    "dumps",
    "load_document",
    "fingerprint",
    "equation_document",
    "equation_flow",
    # Rendering
    "VerificationSummary",
    "render_equation",
    "render_structure",
    "render_summary",
    "summary_table",
    # Entry point
    "cli",
]
