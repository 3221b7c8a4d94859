from pfhat.cli import main

raise SystemExit(main())
