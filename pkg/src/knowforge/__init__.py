"""knowforge: compile OWL ontologies in Turtle into per-language SDK source trees."""

__version__ = "0.1.0"
