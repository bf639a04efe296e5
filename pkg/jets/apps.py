from django.apps import AppConfig


class JetsConfig(AppConfig):
    name = 'jets'
    verbose_name = 'Jet and tangent groups'
