from django.apps import AppConfig


class CohomologyConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'cohomology'
