import sys

from pipedegen.presentation.cli.main import main

sys.exit(main())
