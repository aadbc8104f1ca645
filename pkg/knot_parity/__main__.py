"""Allow ``python -m knot_parity``"""

from .cli import main

raise SystemExit(main())
