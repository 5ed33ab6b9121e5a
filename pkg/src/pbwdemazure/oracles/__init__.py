"""Independent dimension oracles: characters and explicit modules."""
