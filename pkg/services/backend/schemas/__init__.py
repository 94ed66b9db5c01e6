# Pydantic schemas for reports, run configuration and point-set files
