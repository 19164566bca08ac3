from .catalog import load_catalog, get_event, get_pair, suites
