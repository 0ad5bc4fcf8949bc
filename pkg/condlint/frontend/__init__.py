"""Syntax frontend: Python source to the conditional IR"""

from condlint.frontend.fingerprint import fingerprint, fingerprintOfText_compute
from condlint.frontend.ir import ChainSite, ParsedModule, chains_walk
from condlint.frontend.parser import count_lloc, moduleFromFile_parse, parse_module

__all__ = [
    "ChainSite",
    "ParsedModule",
    "chains_walk",
    "count_lloc",
    "fingerprint",
    "fingerprintOfText_compute",
    "moduleFromFile_parse",
    "parse_module",
]
