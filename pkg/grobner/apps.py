from django.apps import AppConfig


class GrobnerConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'grobner'
