"""python -m nabelian"""

import sys

from .cli import main

sys.exit(main())
