import sys

from fermat_adjoint.cli import main

sys.exit(main())
