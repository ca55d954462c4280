from toric_implicit.cli.main import main

raise SystemExit(main())
