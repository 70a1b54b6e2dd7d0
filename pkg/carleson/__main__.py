import sys

from carleson.carleson_cmd import main

sys.exit(main())
