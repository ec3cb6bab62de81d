from typing import Any

import attr


@attr.s(slots=True)
class Entry:
    value: Any = attr.ib()
    hits: int = attr.ib(default=0)
