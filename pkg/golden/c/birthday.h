// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_BIRTHDAY_H
#define KNOW_BIRTHDAY_H

#include <stdbool.h>
#include <stddef.h>

/* Birthday */
#define KNOW_BIRTHDAY_TYPE_IRI "https://know.dev/Birthday"

typedef struct Birthday {
    const char *id;
} Birthday;

#endif /* KNOW_BIRTHDAY_H */
