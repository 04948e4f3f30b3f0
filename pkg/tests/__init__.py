# Tests package for cdc-bounds
