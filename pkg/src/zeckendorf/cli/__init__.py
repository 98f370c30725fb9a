'''
Module:
    zeckendorf.cli

Description:
    Command-line front-end: `decompose`, `classify`, `sets` and `verify`,
    each rendering plain text, CSV, JSON or YAML on stdout.
'''
