"""Logging configuration for the CLI."""
import logging

from core.config import Settings

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(settings: Settings, level: str = None) -> None:
    """Install the root handler.

    Args:
        settings: Runtime settings
        level: Optional override of settings.log_level
    """
    level_name = (level or settings.log_level).upper()
    numeric = logging.getLevelName(level_name)
    if not isinstance(numeric, int):
        numeric = logging.WARNING

    if settings.cloud_logging:
        # Imported lazily: the client needs credentials and network access
        import google.cloud.logging

        client = google.cloud.logging.Client()
        client.setup_logging(log_level=numeric)
        return

    logging.basicConfig(level=numeric, format=LOG_FORMAT, force=True)
