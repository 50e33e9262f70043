import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'gradedflip.settings')
django.setup()
