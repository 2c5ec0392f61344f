"""
Grid parsing utilities for the command line.
Turns range strings like '-10..30' and k selectors like 'sym' into grids and contexts.
"""

import logging
import re
from typing import Dict, Optional

from src.identities import (
    AXES,
    IdentityId,
    IndexRange,
    ParamGrid,
    default_grid,
    get_spec,
)
from src.kfib import KContext

logger = logging.getLogger(__name__)

RANGE_PATTERN = re.compile(r'^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$')


class GridParseError(ValueError):
    """Raised when a range or k selector cannot be parsed"""


class GridParser:
    """Parser for index ranges and evaluation contexts"""

    def parse_range(self, text: str) -> IndexRange:
        """Parse 'a..b' (inclusive) or a single integer 'a'"""
        match = RANGE_PATTERN.match(text or '')
        if not match:
            raise GridParseError(f"invalid range {text!r}, expected a..b")
        start = int(match.group(1))
        stop = int(match.group(2)) if match.group(2) is not None else start
        if stop < start:
            raise GridParseError(f"empty range {text!r}: {stop} < {start}")
        return IndexRange(start=start, stop=stop)

    def parse_context(self, text: str) -> KContext:
        """Parse 'sym' or a positive integer k"""
        try:
            return KContext.parse(text)
        except ValueError as e:
            raise GridParseError(str(e)) from None

    def build_grid(
        self,
        identity: IdentityId,
        ctx: KContext,
        overrides: Optional[Dict[str, Optional[str]]] = None,
    ) -> ParamGrid:
        """Default grid for the identity with any given axis ranges replaced"""
        spec = get_spec(identity)
        grid = default_grid(spec.identity, ctx)
        ranges = dict(grid.axes())
        unused = []

        for axis, text in (overrides or {}).items():
            if text is None:
                continue
            if axis not in spec.params:
                unused.append(axis)
                continue
            ranges[axis] = self.parse_range(text)

        if unused:
            raise GridParseError(
                f"{spec.identity.value} takes parameters {list(spec.params)}, "
                f"got --{', --'.join(unused)}"
            )

        logger.debug(f"Grid for {spec.identity.value}: {self.format_grid_summary(ranges)}")
        return ParamGrid(mode=ctx.label, **ranges)

    def format_grid_summary(self, ranges: Dict[str, IndexRange]) -> str:
        return ', '.join(f"{axis}={ranges[axis]}" for axis in AXES if axis in ranges)
