"""Text and JSON formats for tables, ideals and witnesses."""
